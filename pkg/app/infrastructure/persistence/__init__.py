"""Persistence layer - file-backed repositories"""
