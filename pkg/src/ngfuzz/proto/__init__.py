"""Byte-exact codecs for the protocol layers the fuzzer can rewrite."""
