__all__ = ['consonant', 'net', 'recover']
