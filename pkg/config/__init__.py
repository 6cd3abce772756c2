# Config package
# Contains environment-driven settings
