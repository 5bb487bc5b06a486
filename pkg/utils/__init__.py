"""Configuration, errors, logging and space-file I/O"""
