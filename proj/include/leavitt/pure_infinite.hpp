#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "leavitt/element.hpp"

namespace leavitt::pi {

/// x, y with x a y = 1, checked exactly when constructed by witness().
struct WitnessPair {
  LeavittElement x;
  LeavittElement y;
  /// x a y as computed; always equal to 1.
  LeavittElement certificate;
};

/// Output of the core construction: x of pure degree -n, y of pure degree n.
struct CoreWitness {
  int n;
  LeavittElement x;
  LeavittElement y;
};

/// First r terms of 1,2,1,1,2,2,1,1,1,2,2,2,... (blocks of k ones then k twos).
Word sigma_word(std::size_t r, std::size_t d);

/// r_max used when none is given: 8 (longest word + number of pairs + 1).
std::size_t default_r_max(const std::vector<std::pair<Word, Word>>& pairs);

/// Smallest r <= r_max such that (s_g t_g) s_a t_b (s_g t_g) = 0 for g = sigma_r
/// and every pair (a, b). Every pair needs l(a) != l(b).
Word annihilating_word(const std::vector<std::pair<Word, Word>>& pairs, std::size_t d,
                       std::optional<std::size_t> r_max = std::nullopt);

/// True when (s_g t_g) s_a t_b (s_g t_g) = 0, checked with the symbolic product.
bool annihilates(const Word& gamma, const Word& alpha, const Word& beta);

/// For nonzero a of pure degree 0 at level m: n = m, x in B_{-m}, y in B_m, x a y = 1.
CoreWitness core_witness(const LeavittElement& a);

/// x, y with x a y = 1 for any nonzero a.
WitnessPair witness(const LeavittElement& a, std::optional<std::size_t> r_max = std::nullopt);

}  // namespace leavitt::pi
