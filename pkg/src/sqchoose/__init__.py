"""Mechanical checks for square 7-choosability of subcubic planar graphs without 5-cycles."""
