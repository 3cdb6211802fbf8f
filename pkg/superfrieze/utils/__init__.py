"""Utilities module initialization"""
