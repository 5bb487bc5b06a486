"""CLI command handlers and plain-text report rendering"""
