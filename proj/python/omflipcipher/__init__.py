"""Bit-plane image cipher: scan-path run encoding, keyed block scrambling,
and an omega/flip permutation network, with entropy/correlation analysis."""

from omflipcipher._core import (
    analyze_report,
    binary_entropy,
    choose_block_size,
    correlation,
    decrypt_bytes,
    encrypt_bytes,
    flip_stage,
    grp_permute,
    key_sensitivity,
    keygen_bytes,
    nth_permutation,
    omega_stage,
    omflip_apply,
    omflip_invert,
    read_pgm_size,
    scramble_bits,
    splitmix64_stream,
    unscramble_bits,
)

__all__ = [
    "analyze_report",
    "binary_entropy",
    "choose_block_size",
    "correlation",
    "decrypt_bytes",
    "encrypt_bytes",
    "flip_stage",
    "grp_permute",
    "key_sensitivity",
    "keygen_bytes",
    "nth_permutation",
    "omega_stage",
    "omflip_apply",
    "omflip_invert",
    "read_pgm_size",
    "scramble_bits",
    "splitmix64_stream",
    "unscramble_bits",
]
