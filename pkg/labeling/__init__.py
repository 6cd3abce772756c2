# Labeling package
# Contains the labeling channel and distinct-output counting
