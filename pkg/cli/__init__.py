# CLI package
# Contains the command-line front end
