"""Packaged data files"""
