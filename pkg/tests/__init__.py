"""렌즈 공간 d-invariant 도구 테스트 패키지."""
