# Path uniqueness package
# Contains the exact path-uniqueness decision and walk counting
