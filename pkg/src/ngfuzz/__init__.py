"""ngfuzz: rule-driven replay and fuzzing of 5G control-plane traffic.

The pipeline reads packets from a pcap file or live endpoint, classifies
them with a pluggable DPI engine (eth / ipv4 / sctp / ngap / nas_5g),
matches them against temporal XML rules, rewrites selected protocol
attributes, repairs all dependent length and checksum fields, and emits
the result to a file, socket, or in-memory sink.
"""

__version__ = "0.1.0"
