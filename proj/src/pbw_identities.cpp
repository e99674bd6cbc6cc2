#include "dcla/pbw_identities.hpp"

#include <algorithm>
#include <functional>

#include "dcla/pbw_derived.hpp"

namespace dcla::pbw {

namespace {

struct Ctx {
    const IdentityParams& params;
    const NormalizeOptions& opts;

    long operator[](const std::string& name) const {
        auto it = params.find(name);
        if (it == params.end()) throw ValidationError("missing identity parameter '" + name + "'");
        return it->second;
    }
    Sign sign() const {
        long s = (*this)["sign"];
        if (s != 1 && s != -1) throw ValidationError("sign must be 1 or -1");
        return s > 0 ? Sign::Plus : Sign::Minus;
    }
    UEAElement mul(const UEAElement& a, const UEAElement& b) const { return multiply(a, b, opts); }
    UEAElement comm(const UEAElement& a, const UEAElement& b) const { return commutator(a, b, opts); }
    void require(bool cond, const std::string& what) const {
        if (!cond) throw ValidationError("inadmissible parameters: " + what);
    }
    void nonnegative(std::initializer_list<const char*> names) const {
        for (const char* n : names) require((*this)[n] >= 0, std::string(n) + " >= 0");
    }
};

QPolynomial mq(long w) { return (-Q()).pow(static_cast<unsigned>(w)); }

UEAElement gen(Kind k, long t) { return UEAElement(Generator{k, static_cast<std::uint32_t>(t)}); }

using Check = std::function<UEAElement(const Ctx&)>;

struct Entry {
    IdentityInfo info;
    Check difference;
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> list = {
        {{"jay_power_xplus", "[J_s^<p>, X_t^+] = sum_{z=1}^p (-1)^{z+1}(z+1) J_s^<p-z> X_t^{+((z);s)}",
          {"s", "t", "p"}},
         [](const Ctx& c) {
             c.nonnegative({"s", "t", "p"});
             long s = c["s"], t = c["t"], p = c["p"];
             UEAElement lhs = c.comm(jay_power(s, p), gen(Kind::Xplus, t));
             UEAElement rhs;
             for (long z = 1; z <= p; ++z)
                 rhs += c.mul(jay_power(s, p - z), shifted_block(Sign::Plus, t, z, s)) *
                        Rational((z % 2 == 1 ? 1 : -1) * (z + 1));
             return lhs - rhs;
         }},
        {{"jay_power_xminus", "[J_s^<p>, X_t^-] = -sum_{z=1}^p (-1)^{z+1}(z+1) X_t^{-((z);s)} J_s^<p-z>",
          {"s", "t", "p"}},
         [](const Ctx& c) {
             c.nonnegative({"s", "t", "p"});
             long s = c["s"], t = c["t"], p = c["p"];
             UEAElement lhs = c.comm(jay_power(s, p), gen(Kind::Xminus, t));
             UEAElement rhs;
             for (long z = 1; z <= p; ++z)
                 rhs -= c.mul(shifted_block(Sign::Minus, t, z, s), jay_power(s, p - z)) *
                        Rational((z % 2 == 1 ? 1 : -1) * (z + 1));
             return lhs - rhs;
         }},
        {{"xplus_shifted_xminus", "[X_t^+, X_s^{-((p);h)}] = sum_w C(p,w)(-Q)^w J^<1>_{s+t+ph+w}",
          {"s", "t", "h", "p"}},
         [](const Ctx& c) {
             c.nonnegative({"s", "t", "h"});
             c.require(c["p"] > 0, "p > 0");
             long s = c["s"], t = c["t"], h = c["h"], p = c["p"];
             UEAElement lhs = c.comm(gen(Kind::Xplus, t), shifted_block(Sign::Minus, s, p, h));
             UEAElement rhs;
             for (long w = 0; w <= p; ++w)
                 rhs += jay_power(s + t + p * h + w, 1) * (QPolynomial(binomial(p, w)) * mq(w));
             return lhs - rhs;
         }},
        {{"jay1_shifted_xplus", "[J_s^<1>, X_t^{+((p);h)}] = 2 X_{s+t-h}^{+((p+1);h)}", {"s", "t", "h", "p"}},
         [](const Ctx& c) {
             c.nonnegative({"s", "t", "h"});
             c.require(c["p"] > 0, "p > 0");
             long s = c["s"], t = c["t"], h = c["h"], p = c["p"];
             UEAElement lhs = c.comm(jay_power(s, 1), shifted_block(Sign::Plus, t, p, h));
             return lhs - shifted_block(Sign::Plus, s + t - h, p + 1, h) * Rational(2);
         }},
        {{"jay1_shifted_xminus", "[J_s^<1>, X_t^{-((p);h)}] = -2 X_{s+t-h}^{-((p+1);h)}", {"s", "t", "h", "p"}},
         [](const Ctx& c) {
             c.nonnegative({"s", "t", "h"});
             c.require(c["p"] > 0, "p > 0");
             long s = c["s"], t = c["t"], h = c["h"], p = c["p"];
             UEAElement lhs = c.comm(jay_power(s, 1), shifted_block(Sign::Minus, t, p, h));
             return lhs + shifted_block(Sign::Minus, s + t - h, p + 1, h) * Rational(2);
         }},
        {{"xplus_divided_xminus",
          "[X_t^+, X_s^{-(c)}] = X_s^{-(c-1)} J^<1>_{s+t} - X_s^{-(c-2)} X_s^{-((1);s+t)}", {"s", "t", "c"}},
         [](const Ctx& c) {
             c.nonnegative({"s", "t", "c"});
             long s = c["s"], t = c["t"], cc = c["c"];
             UEAElement lhs = c.comm(gen(Kind::Xplus, t), divided_power(Sign::Minus, s, cc));
             UEAElement rhs = c.mul(divided_power(Sign::Minus, s, cc - 1), jay_power(s + t, 1)) -
                              c.mul(divided_power(Sign::Minus, s, cc - 2), shifted_block(Sign::Minus, s, 1, s + t));
             return lhs - rhs;
         }},
        {{"mixed_block_negative", "X_t^{±(b;p|k;h)} = 0 when b - p < 0", {"sign", "t", "b", "p", "k", "h"}},
         [](const Ctx& c) {
             c.nonnegative({"t", "b", "p", "k", "h"});
             c.require(c["b"] < c["p"], "b < p");
             return mixed_block(c.sign(), c["t"], c["b"], c["p"], c["k"], c["h"]);
         }},
        {{"mixed_block_low_k",
          "X_t^{±(b;p|0;h)} = X_t^{±(b-p)} and X_t^{±(b;p|1;h)} = X_t^{±((1);h)} X_t^{±(b-p-1)}",
          {"sign", "t", "b", "p", "k", "h"}},
         [](const Ctx& c) {
             c.nonnegative({"t", "b", "p", "k", "h"});
             c.require(c["k"] <= 1, "k in {0,1}");
             Sign sg = c.sign();
             long t = c["t"], b = c["b"], p = c["p"], k = c["k"], h = c["h"];
             UEAElement lhs = mixed_block(sg, t, b, p, k, h);
             UEAElement rhs = k == 0 ? divided_power(sg, t, b - p)
                                     : c.mul(shifted_block(sg, t, 1, h), divided_power(sg, t, b - p - 1));
             return lhs - rhs;
         }},
        {{"mixed_block_full", "X_t^{±(b;b|k;h)} = 1 if k = 0, 0 otherwise", {"sign", "t", "b", "p", "k", "h"}},
         [](const Ctx& c) {
             c.nonnegative({"t", "b", "p", "k", "h"});
             c.require(c["b"] == c["p"], "p = b");
             UEAElement lhs = mixed_block(c.sign(), c["t"], c["b"], c["p"], c["k"], c["h"]);
             return lhs - UEAElement(c["k"] == 0 ? 1 : 0);
         }},
        {{"mixed_block_shift", "X_t^{±(b;p|k;h)} = X_t^{±(b-1;p-1|k;h)} for b, p > 0",
          {"sign", "t", "b", "p", "k", "h"}},
         [](const Ctx& c) {
             c.nonnegative({"t", "k", "h"});
             c.require(c["b"] > 0 && c["p"] > 0, "b, p > 0");
             Sign sg = c.sign();
             long t = c["t"], b = c["b"], p = c["p"], k = c["k"], h = c["h"];
             return mixed_block(sg, t, b, p, k, h) - mixed_block(sg, t, b - 1, p - 1, k, h);
         }},
        {{"mixed_block_recursion",
          "X_t^{±(b;p|k;h)} = (1/k) sum_{z=1}^k z X_t^{±((z);h)} X_t^{±(b-1;p|k-z;h)} for b, k > 0",
          {"sign", "t", "b", "p", "k", "h"}},
         [](const Ctx& c) {
             c.nonnegative({"t", "p", "h"});
             c.require(c["b"] > 0 && c["k"] > 0, "b, k > 0");
             Sign sg = c.sign();
             long t = c["t"], b = c["b"], p = c["p"], k = c["k"], h = c["h"];
             UEAElement rhs;
             for (long z = 1; z <= k; ++z)
                 rhs += c.mul(shifted_block(sg, t, z, h), mixed_block(sg, t, b - 1, p, k - z, h)) * Rational(z);
             return mixed_block(sg, t, b, p, k, h) - rhs * Rational(1, k);
         }},
        {{"mixed_block_product",
          "(b-p+k) X_t^{±(b;p|k;h)} = X_t^± X_t^{±(b-1;p|k;h)} + sum_{z=1}^k (z+1) X_t^{±((z);h)} "
          "X_t^{±(b-1;p|k-z;h)} for b > 0",
          {"sign", "t", "b", "p", "k", "h"}},
         [](const Ctx& c) {
             c.nonnegative({"t", "p", "k", "h"});
             c.require(c["b"] > 0, "b > 0");
             Sign sg = c.sign();
             long t = c["t"], b = c["b"], p = c["p"], k = c["k"], h = c["h"];
             UEAElement lhs = mixed_block(sg, t, b, p, k, h) * Rational(b - p + k);
             UEAElement rhs = c.mul(UEAElement(x_gen(sg, static_cast<std::uint32_t>(t))),
                                    mixed_block(sg, t, b - 1, p, k, h));
             for (long z = 1; z <= k; ++z)
                 rhs += c.mul(shifted_block(sg, t, z, h), mixed_block(sg, t, b - 1, p, k - z, h)) *
                        Rational(z + 1);
             return lhs - rhs;
         }},
        {{"xplus_mixed_xminus",
          "[X_t^+, X_s^{-(c;p|k;s+t)}] = sum_{z=0}^k sum_{w=0}^{k-z} C(k-z,w)(-Q)^w X_s^{-(c;p+1|z;s+t)} "
          "J^<1>_{(k-z+1)(s+t)+w} - (k+1) X_s^{-(c;p+1|k+1;s+t)}",
          {"s", "t", "c", "p", "k"}},
         [](const Ctx& c) {
             c.nonnegative({"s", "t", "c", "p", "k"});
             long s = c["s"], t = c["t"], cc = c["c"], p = c["p"], k = c["k"];
             long st = s + t;
             UEAElement lhs = c.comm(gen(Kind::Xplus, t), mixed_block(Sign::Minus, s, cc, p, k, st));
             UEAElement rhs;
             for (long z = 0; z <= k; ++z) {
                 UEAElement left = mixed_block(Sign::Minus, s, cc, p + 1, z, st);
                 if (left.is_zero()) continue;
                 UEAElement jsum;
                 for (long w = 0; w <= k - z; ++w)
                     jsum += jay_power((k - z + 1) * st + w, 1) * (QPolynomial(binomial(k - z, w)) * mq(w));
                 rhs += c.mul(left, jsum);
             }
             rhs -= mixed_block(Sign::Minus, s, cc, p + 1, k + 1, st) * Rational(k + 1);
             return lhs - rhs;
         }},
        {{"commutation_divided_powers",
          "[X_t^{+(b)}, X_s^{-(c)}] = sum_{p=1}^{min(b,c)} sum_{k=0}^p sum_{l=0}^{p-k} (-1)^{k+l} "
          "X_s^{-(c;p|k;s+t)} J_{s+t}^<p-(k+l)> X_t^{+(b;p|l;s+t)}",
          {"s", "t", "b", "c"}},
         [](const Ctx& c) {
             c.nonnegative({"s", "t", "b", "c"});
             long s = c["s"], t = c["t"], b = c["b"], cc = c["c"];
             long st = s + t;
             UEAElement lhs = c.comm(divided_power(Sign::Plus, t, b), divided_power(Sign::Minus, s, cc));
             UEAElement rhs;
             for (long p = 1; p <= std::min(b, cc); ++p)
                 for (long k = 0; k <= p; ++k) {
                     UEAElement left = mixed_block(Sign::Minus, s, cc, p, k, st);
                     if (left.is_zero()) continue;
                     for (long l = 0; l <= p - k; ++l) {
                         UEAElement right = mixed_block(Sign::Plus, t, b, p, l, st);
                         if (right.is_zero()) continue;
                         UEAElement term = c.mul(c.mul(left, jay_power(st, p - k - l)), right);
                         if ((k + l) % 2 == 0)
                             rhs += term;
                         else
                             rhs -= term;
                     }
                 }
             return lhs - rhs;
         }},
        {{"binomial_convolution",
          "sum_{l=max(0,w-(z-k))}^{min(k,w)} C(z-k,w-l) C(k,l) = C(z,w)", {"z", "k", "w"}},
         [](const Ctx& c) {
             long z = c["z"], k = c["k"], w = c["w"];
             c.require(z >= 0 && k >= 0 && k <= z && w >= 0 && w <= z, "0 <= k, w <= z");
             Rational sum(0);
             for (long l = std::max(0L, w - (z - k)); l <= std::min(k, w); ++l)
                 sum += binomial(z - k, w - l) * binomial(k, l);
             return UEAElement(QPolynomial(sum - binomial(z, w)));
         }},
        {{"dagger_shifted_block", "dagger(X_t^{+((p);h)}) = X_t^{-((p);h)}", {"t", "p", "h"}},
         [](const Ctx& c) {
             c.nonnegative({"t", "p", "h"});
             long t = c["t"], p = c["p"], h = c["h"];
             return dagger(shifted_block(Sign::Plus, t, p, h), c.opts) - shifted_block(Sign::Minus, t, p, h);
         }},
        {{"dagger_partition_block", "dagger(X_t^{+(λ;h)}) = X_t^{-(λ;h)}, λ = (part1, part2, ...)",
          {"t", "h", "part1", "part2", "part3", "part4"}},
         [](const Ctx& c) {
             c.nonnegative({"t", "h"});
             Partition lambda;
             for (const auto& [name, v] : c.params) {
                 if (name.rfind("part", 0) != 0 || v == 0) continue;
                 c.require(v > 0, "positive parts");
                 lambda.push_back(static_cast<unsigned>(v));
             }
             std::sort(lambda.rbegin(), lambda.rend());
             long t = c["t"], h = c["h"];
             return dagger(partition_block(Sign::Plus, t, lambda, h), c.opts) -
                    partition_block(Sign::Minus, t, lambda, h);
         }},
        {{"dagger_mixed_block", "dagger(X_t^{+(b;p|k;h)}) = X_t^{-(b;p|k;h)}", {"t", "b", "p", "k", "h"}},
         [](const Ctx& c) {
             c.nonnegative({"t", "b", "p", "k", "h"});
             long t = c["t"], b = c["b"], p = c["p"], k = c["k"], h = c["h"];
             return dagger(mixed_block(Sign::Plus, t, b, p, k, h), c.opts) -
                    mixed_block(Sign::Minus, t, b, p, k, h);
         }},
    };
    return list;
}

const Entry& find_entry(const std::string& name) {
    for (const auto& e : entries())
        if (e.info.name == name) return e;
    throw ValidationError("unknown identity '" + name + "'");
}

// Cartesian product of named integer ranges, filtered.
std::vector<IdentityParams> product(const std::vector<std::pair<std::string, std::pair<long, long>>>& ranges,
                                    const std::function<bool(const IdentityParams&)>& keep) {
    std::vector<IdentityParams> out;
    IdentityParams cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == ranges.size()) {
            if (keep(cur)) out.push_back(cur);
            return;
        }
        const auto& [name, r] = ranges[i];
        for (long v = r.first; v <= r.second; ++v) {
            cur[name] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace

const std::vector<IdentityInfo>& identity_catalog() {
    static const std::vector<IdentityInfo> infos = [] {
        std::vector<IdentityInfo> v;
        for (const auto& e : entries()) v.push_back(e.info);
        return v;
    }();
    return infos;
}

IdentityResult verify_identity(const std::string& name, const IdentityParams& params, const NormalizeOptions& opts) {
    const Entry& e = find_entry(name);
    Ctx ctx{params, opts};
    IdentityResult r;
    r.difference = e.difference(ctx);
    r.holds = r.difference.is_zero();
    return r;
}

std::vector<IdentityParams> identity_grid(const std::string& name, const GridConfig& g) {
    find_entry(name);
    auto all = [](const IdentityParams&) { return true; };
    std::pair<long, long> st{0, g.st_max}, bc{1, g.bc_max}, b0{0, g.bc_max}, k0{0, g.partition_max},
        pos{1, g.bc_max}, sign{-1, 1};
    auto mixed = [&](std::function<bool(const IdentityParams&)> cond) {
        return product({{"sign", sign}, {"t", st}, {"h", st}, {"b", b0}, {"p", b0}, {"k", k0}},
                       [cond](const IdentityParams& p) { return p.at("sign") != 0 && cond(p); });
    };
    if (name == "jay_power_xplus" || name == "jay_power_xminus")
        return product({{"s", st}, {"t", st}, {"p", b0}}, all);
    if (name == "xplus_shifted_xminus" || name == "jay1_shifted_xplus" || name == "jay1_shifted_xminus")
        return product({{"s", st}, {"t", st}, {"h", st}, {"p", pos}}, all);
    if (name == "xplus_divided_xminus") return product({{"s", st}, {"t", st}, {"c", bc}}, all);
    if (name == "mixed_block_negative") return mixed([](const IdentityParams& p) { return p.at("b") < p.at("p"); });
    if (name == "mixed_block_low_k") return mixed([](const IdentityParams& p) { return p.at("k") <= 1; });
    if (name == "mixed_block_full") return mixed([](const IdentityParams& p) { return p.at("b") == p.at("p"); });
    if (name == "mixed_block_shift")
        return mixed([](const IdentityParams& p) { return p.at("b") > 0 && p.at("p") > 0; });
    if (name == "mixed_block_recursion")
        return mixed([](const IdentityParams& p) { return p.at("b") > 0 && p.at("k") > 0; });
    if (name == "mixed_block_product") return mixed([](const IdentityParams& p) { return p.at("b") > 0; });
    if (name == "xplus_mixed_xminus")
        return product({{"s", st}, {"t", st}, {"c", bc}, {"p", b0}, {"k", k0}},
                       [](const IdentityParams& p) { return p.at("p") <= p.at("c"); });
    if (name == "commutation_divided_powers") return product({{"s", st}, {"t", st}, {"b", bc}, {"c", bc}}, all);
    if (name == "binomial_convolution")
        return product({{"z", {0, g.binomial_max}}, {"k", {0, g.binomial_max}}, {"w", {0, g.binomial_max}}},
                       [](const IdentityParams& p) { return p.at("k") <= p.at("z") && p.at("w") <= p.at("z"); });
    if (name == "dagger_shifted_block") return product({{"t", st}, {"p", b0}, {"h", st}}, all);
    if (name == "dagger_partition_block") {
        std::vector<IdentityParams> out;
        for (long size = 0; size <= g.partition_max; ++size)
            for (const auto& lambda : partitions_of(static_cast<unsigned>(size)))
                for (long t = 0; t <= g.st_max; ++t)
                    for (long h = 0; h <= g.st_max; ++h) {
                        IdentityParams p{{"t", t}, {"h", h}};
                        for (std::size_t i = 0; i < 4; ++i)
                            p["part" + std::to_string(i + 1)] = i < lambda.size() ? lambda[i] : 0;
                        if (lambda.size() > 4) continue;
                        out.push_back(p);
                    }
        return out;
    }
    if (name == "dagger_mixed_block")
        return product({{"t", st}, {"h", st}, {"b", b0}, {"p", b0}, {"k", k0}},
                       [](const IdentityParams& p) { return p.at("p") <= p.at("b"); });
    throw InternalConsistency("identity '" + name + "' has no grid");
}

}  // namespace dcla::pbw
