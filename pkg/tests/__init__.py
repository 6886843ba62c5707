# Test package for poincareseries
