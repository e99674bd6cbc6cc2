#pragma once

#include <vector>

#include "pbw.hpp"

namespace dcla::pbw {

enum class Sign { Plus, Minus };

// Weakly decreasing positive parts.
using Partition = std::vector<unsigned>;

std::vector<Partition> partitions_of(unsigned k);

Generator x_gen(Sign sign, std::uint32_t t);

// (X_t^±)^b / b!; zero for b < 0.
UEAElement divided_power(Sign sign, long t, long b);

// X_t^{±((p);h)} = sum_w C(p,w) (-Q)^w X^±_{t+ph+w}; 1 for p = 0.
// t may be negative as long as t + ph >= 0.
UEAElement shifted_block(Sign sign, long t, long p, long h);

// J_s^{<p>} by its defining recursion; 1 for p = 0.
UEAElement jay_power(long s, long p);

// X_t^{±(λ;h)} = prod_j (X_t^{±((j);h)})^{m_j} / m_j!
UEAElement partition_block(Sign sign, long t, const Partition& lambda, long h);

// X_t^{±(b;p|k;h)} = sum_{λ ⊢ k} X_t^{±(λ;h)} X_t^{±(b-p-ℓ(λ))}
UEAElement mixed_block(Sign sign, long t, long b, long p, long k, long h);

}  // namespace dcla::pbw
