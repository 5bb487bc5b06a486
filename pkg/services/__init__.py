"""Operations on fuzzy soft sets, topologies, mappings and covers"""
