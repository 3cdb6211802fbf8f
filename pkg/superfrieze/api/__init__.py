"""API module initialization"""
