# Anchors the tests directory so `import oracles` / `import sweeps` work
# from any invocation directory.
