#pragma once

// Batched phase-space propagation. Each lane carries its own state and step
// size; all lanes advance in lockstep. The scalar kernel is the reference;
// the AVX2 kernel must reproduce it bit for bit (no FMA contraction in either).

#include <cstddef>
#include <span>
#include <string>

#include "shadowham/oscillator.hpp"

namespace shadowham::kernels {

enum class Isa { Scalar, Avx2 };

std::string to_string(Isa isa);

/// Compiled in and supported by the running CPU.
bool isa_available(Isa isa);

/// Widest available ISA.
Isa best_isa();

/// Structure-of-arrays batch. p, q are updated in place; max_radius_sq[i]
/// is raised to the largest p^2 + q^2 seen in lane i, including the entry
/// state. All spans must have equal length.
struct Batch {
  std::span<double> p;
  std::span<double> q;
  std::span<const double> x;
  std::span<double> max_radius_sq;
};

void advance_scalar(SchemeId scheme, const Batch& batch, std::size_t n_steps);

/// Only valid when isa_available(Isa::Avx2).
void advance_avx2(SchemeId scheme, const Batch& batch, std::size_t n_steps);

/// Throws UsageError on span length mismatch or an unavailable ISA.
void advance(SchemeId scheme, const Batch& batch, std::size_t n_steps, Isa isa = best_isa());

}  // namespace shadowham::kernels
