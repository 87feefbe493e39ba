"""Shared types, errors, constants and settings used by every mechanism package"""
