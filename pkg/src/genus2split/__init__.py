"""Genus 2 curves with (4,4)-split Jacobians: exact arithmetic, Richelot
isogenies, the (b, c, s) family, and interpolation of its Humbert relation."""

__version__ = "0.1.0"
