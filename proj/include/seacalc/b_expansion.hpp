#pragma once

#include "seacalc/poly.hpp"
#include "seacalc/series.hpp"

namespace seacalc {

/// Expands a pk-layer core into B-words over {p, k, s}. Every internal b-line
/// becomes sum_j (-1)^j B (s B)^j; with `wrapped`, the plain wrappers add
/// sum_i (-1)^i (s B)^i on the left and sum_i (-1)^i (B s)^i on the right.
/// The result keeps words with at most `order` factors B.
BPoly expand_core(const PkPoly& core, int order, bool wrapped = true);

/// Expands the canonical core of a named series. X, Y, A, U and PtildeY are
/// inner series and are expanded without wrappers.
BPoly expand_named(const SeriesBuilder& builder, SeriesId id, int order);

/// Expansion of the direct single-sum form (Ktilde and PtildeRes only).
/// Throws std::invalid_argument for other ids.
BPoly expand_direct(const SeriesBuilder& builder, SeriesId id, int order);

/// Maps every letter p to k; colliding words are merged.
BPoly replace_p_by_k(const BPoly& poly);

}  // namespace seacalc
