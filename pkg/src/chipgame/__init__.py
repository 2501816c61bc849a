"""Exact solving and verification of chip games for complete multipartite paintability."""
