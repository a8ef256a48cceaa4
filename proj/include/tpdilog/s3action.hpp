#pragma once

// The subvariety Ñ⁺ₙ ⊂ N⁺ₙ on which ′ and ″ generate an action of S₃,
// the obstruction ratios Q_i, and the y-ratio functions.

#include "tpdilog/core.hpp"

#include <array>
#include <string_view>
#include <vector>

namespace tpdilog {

/// Q_i for 1 <= i < n/2: the ratio
///   ∏_{k=i+1}^{n} x_{ik}/x_{n+1-k,n+1-i}  /  ∏_{k=1}^{i-1} x_{ki}/x_{n+1-i,n+1-k}.
std::vector<Rational> q_values(const Coords& x);
std::vector<Rational> q_values(const RMatrix& m);

/// Δ_{[1,i]} Δ_{[1,n+1-i]} / (Δ_{[1,i-1]} Δ_{[1,n-i]}) for 1 <= i < n.
/// Equals Q_i when i < n/2.
Rational q_value_from_minors(const RMatrix& m, int i);

/// All Q_i equal 1.
bool in_tilde(const Coords& x);

/// Moves x onto Ñ⁺ₙ by dividing x_{i,i+1} by Q_i for i = 1, 2, ... < n/2.
Coords project_to_tilde(const Coords& x);

/// (D_M)_{ii} (D_M)_{n+1-i,n+1-i} = (-1)^{n+1} for every i in [1, n].
bool d_criterion(const Coords& x);

/// (D_M P)² is a multiple of the identity.
bool dp_squared_is_scalar(const Coords& x);

/// ((M′)″)′ = ((M″)′)″, exactly.
bool verify_mrho(const RMatrix& m);

/// Elements of S₃ as reduced words in σ₁, σ₂; σ₂σ₁ acts by M -> (M′)″.
enum class S3Word { id, s1, s2, s2s1, s1s2, s1s2s1, s2s1s2 };

/// The seven reduced words (σ₁σ₂σ₁ and σ₂σ₁σ₂ name the same element).
inline constexpr std::array<S3Word, 7> kAllWords = {S3Word::id,   S3Word::s1,     S3Word::s2,    S3Word::s2s1,
                                                    S3Word::s1s2, S3Word::s1s2s1, S3Word::s2s1s2};

std::string_view word_name(S3Word w);
S3Word parse_word(std::string_view name);
/// +1 for even words, -1 for odd.
int word_sign(S3Word w);
/// Generators in the order they are applied to M.
std::vector<int> word_letters(S3Word w);
/// The word for a∘b (apply b, then a); uses σ₁σ₂σ₁ for the longest element.
S3Word compose(S3Word a, S3Word b);

Coords s3_apply(const Coords& x, S3Word w);
RMatrix s3_value(const RMatrix& m, S3Word w);

/// y_{ij} = x_{ij}/x_{i+1,j+1} for 1 <= i < j <= n-1.
Rational y_ratio(const Coords& x, int i, int j);
/// ȳ_{ij}(M) = y_{ij}(M̄).
Rational y_ratio_bar(const Coords& x, int i, int j);

}  // namespace tpdilog
