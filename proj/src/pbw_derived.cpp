#include "dcla/pbw_derived.hpp"

#include <map>

namespace dcla::pbw {

namespace {

void partitions_rec(unsigned remaining, unsigned max_part, Partition& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(remaining - part, part, cur, out);
        cur.pop_back();
    }
}

QPolynomial minus_q_pow(long w) { return (-Q()).pow(static_cast<unsigned>(w)); }

void require_nonnegative(long v, const char* what) {
    if (v < 0) throw PreconditionError(std::string(what) + " must be nonnegative");
}

}  // namespace

std::vector<Partition> partitions_of(unsigned k) {
    std::vector<Partition> out;
    Partition cur;
    partitions_rec(k, k, cur, out);
    return out;
}

Generator x_gen(Sign sign, std::uint32_t t) { return sign == Sign::Plus ? Xp(t) : Xm(t); }

UEAElement divided_power(Sign sign, long t, long b) {
    require_nonnegative(t, "degree t");
    if (b < 0) return UEAElement();
    Word w(static_cast<std::size_t>(b), x_gen(sign, static_cast<std::uint32_t>(t)));
    return UEAElement::term(QPolynomial(factorial(b).inverse()), PBWMonomial(std::move(w)));
}

UEAElement shifted_block(Sign sign, long t, long p, long h) {
    require_nonnegative(p, "p");
    require_nonnegative(h, "h");
    if (p == 0) return UEAElement(1);
    if (t + p * h < 0) throw PreconditionError("shifted block index t + ph is negative");
    UEAElement r;
    for (long w = 0; w <= p; ++w)
        r += UEAElement(x_gen(sign, static_cast<std::uint32_t>(t + p * h + w))) *
             (QPolynomial(binomial(p, w)) * minus_q_pow(w));
    return r;
}

UEAElement jay_power(long s, long p) {
    require_nonnegative(s, "s");
    require_nonnegative(p, "p");
    std::vector<UEAElement> jp{UEAElement(1)};
    for (long q = 1; q <= p; ++q) {
        UEAElement acc;
        for (long z = 1; z <= q; ++z) {
            UEAElement inner;
            for (long w = 0; w <= z; ++w)
                inner += UEAElement(Jg(static_cast<std::uint32_t>(z * s + w))) *
                         (QPolynomial(binomial(z, w)) * minus_q_pow(w));
            UEAElement term = inner * jp[static_cast<std::size_t>(q - z)];
            if (z % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        jp.push_back(acc * Rational(1, q));
    }
    return jp[static_cast<std::size_t>(p)];
}

UEAElement partition_block(Sign sign, long t, const Partition& lambda, long h) {
    std::map<unsigned, unsigned> mult;
    for (unsigned part : lambda) {
        if (part == 0) continue;
        ++mult[part];
    }
    UEAElement r(1);
    for (const auto& [j, m] : mult) {
        UEAElement block = shifted_block(sign, t, j, h);
        UEAElement power(1);
        for (unsigned e = 0; e < m; ++e) power = power * block;
        r = r * (power * factorial(m).inverse());
    }
    return r;
}

UEAElement mixed_block(Sign sign, long t, long b, long p, long k, long h) {
    require_nonnegative(k, "k");
    UEAElement r;
    for (const auto& lambda : partitions_of(static_cast<unsigned>(k))) {
        long len = static_cast<long>(lambda.size());
        if (b - p - len < 0) continue;
        r += partition_block(sign, t, lambda, h) * divided_power(sign, t, b - p - len);
    }
    return r;
}

}  // namespace dcla::pbw
