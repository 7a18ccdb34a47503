"""Integrity checksums: CRC-32c for SCTP and the ones' complement sum for IPv4."""

# Castagnoli polynomial 0x1EDC6F41, bit-reversed for the reflected algorithm.
_POLY_REFLECTED = 0x82F63B78


def _build_table():
    table = []
    for i in range(256):
        crc = i
        for _ in range(8):
            crc = (crc >> 1) ^ _POLY_REFLECTED if crc & 1 else crc >> 1
        table.append(crc)
    return tuple(table)


_TABLE = _build_table()


def crc32c(data: bytes) -> int:
    """CRC-32c of data (reflected, init and final XOR 0xFFFFFFFF).

    Returns the checksum as an integer; SCTP stores it little-endian in
    the common header (RFC 9260 appendix B byte order).
    """
    crc = 0xFFFFFFFF
    for byte in data:
        crc = (crc >> 8) ^ _TABLE[(crc ^ byte) & 0xFF]
    return crc ^ 0xFFFFFFFF


def inet_checksum(data: bytes) -> int:
    """RFC 1071 16-bit ones' complement sum, used for the IPv4 header."""
    if len(data) % 2:
        data += b"\x00"
    total = 0
    for i in range(0, len(data), 2):
        total += (data[i] << 8) | data[i + 1]
    while total > 0xFFFF:
        total = (total & 0xFFFF) + (total >> 16)
    return ~total & 0xFFFF
