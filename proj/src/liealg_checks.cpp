#include <algorithm>
#include <functional>

#include "dcla/liealg.hpp"
#include "dcla/pbw.hpp"

namespace dcla::liealg {

void FamilyReport::record(bool ok, const std::string& what) {
    ++instances;
    if (ok) return;
    ++failures;
    if (examples.size() < 5) examples.push_back(what);
}

bool CheckReport::passed() const {
    return std::all_of(families.begin(), families.end(), [](const FamilyReport& f) { return f.passed(); });
}

std::size_t CheckReport::instances() const {
    std::size_t n = 0;
    for (const auto& f : families) n += f.instances;
    return n;
}

std::size_t CheckReport::failures() const {
    std::size_t n = 0;
    for (const auto& f : families) n += f.failures;
    return n;
}

namespace {

std::string num(unsigned v) { return std::to_string(v); }

// A presentation in the shape shared by sl, gl and g_Qhat(m): X generators
// indexed 1..nx with adjacency |i-j| = 1, Cartan-type generators 1..nc.
struct Presentation {
    unsigned nx = 0, nc = 0;
    std::string cartan_name;  // "J" or "I"
    std::function<LieElement(unsigned, unsigned)> xp, xm, cartan;
    std::function<Rational(unsigned, unsigned)> coupling;        // [H_j, X+_i] = coupling(j,i) X+_i
    std::function<LieElement(unsigned, unsigned)> plus_minus;    // [X+_{i,t}, X-_{i,s}] for s+t
};

CheckReport check_presentation(const Presentation& P, StructureEngine& eng, unsigned N) {
    FamilyReport cc{"[" + P.cartan_name + "," + P.cartan_name + "]=0"};
    FamilyReport cx{"[" + P.cartan_name + ",X]"};
    FamilyReport pm{"[X+,X-]"};
    FamilyReport far{"[X,X]=0 unless adjacent"};
    FamilyReport shift{"shift"};
    FamilyReport serre{"serre"};

    auto adjacent = [](unsigned i, unsigned j) { return i + 1 == j || j + 1 == i; };

    for (unsigned a = 1; a <= P.nc; ++a)
        for (unsigned b = 1; b <= P.nc; ++b)
            for (unsigned s = 0; s <= N; ++s)
                for (unsigned t = 0; t <= N; ++t)
                    cc.record(eng.bracket(P.cartan(a, s), P.cartan(b, t)).is_zero(),
                              P.cartan_name + num(a) + "," + num(s) + " with " + num(b) + "," + num(t));

    for (unsigned j = 1; j <= P.nc; ++j)
        for (unsigned i = 1; i <= P.nx; ++i)
            for (unsigned s = 0; s <= N; ++s)
                for (unsigned t = 0; t <= N; ++t) {
                    Rational c = P.coupling(j, i);
                    std::string at = "j=" + num(j) + " i=" + num(i) + " s=" + num(s) + " t=" + num(t);
                    cx.record(eng.bracket(P.cartan(j, s), P.xp(i, t)) == P.xp(i, s + t) * c, "+ " + at);
                    cx.record(eng.bracket(P.cartan(j, s), P.xm(i, t)) == P.xm(i, s + t) * (-c), "- " + at);
                }

    for (unsigned i = 1; i <= P.nx; ++i)
        for (unsigned j = 1; j <= P.nx; ++j)
            for (unsigned t = 0; t <= N; ++t)
                for (unsigned s = 0; s <= N; ++s) {
                    LieElement want = i == j ? P.plus_minus(i, s + t) : LieElement();
                    pm.record(eng.bracket(P.xp(i, t), P.xm(j, s)) == want,
                              "i=" + num(i) + " j=" + num(j) + " t=" + num(t) + " s=" + num(s));
                }

    for (int sign : {1, -1}) {
        auto x = sign > 0 ? P.xp : P.xm;
        std::string sg = sign > 0 ? "+" : "-";
        for (unsigned i = 1; i <= P.nx; ++i)
            for (unsigned j = 1; j <= P.nx; ++j) {
                if (!adjacent(i, j)) {
                    for (unsigned t = 0; t <= N; ++t)
                        for (unsigned s = 0; s <= N; ++s)
                            far.record(eng.bracket(x(i, t), x(j, s)).is_zero(),
                                       sg + " i=" + num(i) + " j=" + num(j) + " t=" + num(t) + " s=" + num(s));
                    continue;
                }
                for (unsigned t = 0; t + 1 <= N; ++t)
                    for (unsigned s = 0; s + 1 <= N; ++s)
                        shift.record(eng.bracket(x(i, t + 1), x(j, s)) == eng.bracket(x(i, t), x(j, s + 1)),
                                     sg + " i=" + num(i) + " j=" + num(j) + " t=" + num(t) + " s=" + num(s));
                for (unsigned s = 0; s <= N; ++s)
                    for (unsigned t = 0; t <= N; ++t)
                        for (unsigned u = 0; u <= N; ++u)
                            serre.record(eng.bracket(x(i, s), eng.bracket(x(i, t), x(j, u))).is_zero(),
                                         sg + " i=" + num(i) + " j=" + num(j) + " s=" + num(s) + " t=" +
                                             num(t) + " u=" + num(u));
            }
    }
    return CheckReport{{cc, cx, pm, far, shift, serre}};
}

Presentation presentation_of(const AlgebraSpec& spec) {
    Presentation P;
    P.nx = spec.m - 1;
    P.xp = [](unsigned i, unsigned t) { return xplus(i, t); };
    P.xm = [](unsigned i, unsigned t) { return xminus(i, t); };
    P.plus_minus = [spec](unsigned i, unsigned d) {
        return jay(spec, i, d) - jay(spec, i, d + 1) * spec.Qi(i);
    };
    if (spec.variant == Variant::sl) {
        P.nc = spec.m - 1;
        P.cartan_name = "J";
        P.cartan = [](unsigned i, unsigned t) { return LieElement(BasisElement::J(i, t)); };
        P.coupling = [](unsigned j, unsigned i) {
            if (j == i) return Rational(2);
            if (j + 1 == i || i + 1 == j) return Rational(-1);
            return Rational(0);
        };
    } else {
        P.nc = spec.m;
        P.cartan_name = "I";
        P.cartan = [](unsigned j, unsigned t) { return LieElement(BasisElement::I(j, t)); };
        P.coupling = [](unsigned j, unsigned i) {
            if (j == i) return Rational(1);
            if (j == i + 1) return Rational(-1);
            return Rational(0);
        };
    }
    return P;
}

}  // namespace

CheckReport check_relations(StructureEngine& engine, unsigned N) {
    return check_presentation(presentation_of(engine.spec()), engine, N);
}

CheckReport check_relations(const StructureTable& table) {
    StructureEngine engine(table);
    return check_relations(engine, table.spec.N);
}

CheckReport check_antisymmetry(const StructureTable& table) {
    FamilyReport f{"antisymmetry"};
    for (const auto& [key, value] : table.entries) {
        auto it = table.entries.find({key.second, key.first});
        bool ok = it != table.entries.end() && it->second == -value;
        f.record(ok, key.first.str() + ", " + key.second.str());
    }
    return CheckReport{{f}};
}

CheckReport check_jacobi(StructureEngine& engine, unsigned N) {
    FamilyReport f{"jacobi"};
    auto B = basis(engine.spec(), N);
    for (std::size_t x = 0; x < B.size(); ++x)
        for (std::size_t y = x; y < B.size(); ++y)
            for (std::size_t z = y; z < B.size(); ++z) {
                const auto &a = B[x], &b = B[y], &c = B[z];
                LieElement sum = engine.bracket(LieElement(a), engine.bracket(b, c));
                sum += engine.bracket(LieElement(b), engine.bracket(c, a));
                sum += engine.bracket(LieElement(c), engine.bracket(a, b));
                f.record(sum.is_zero(), a.str() + ", " + b.str() + ", " + c.str());
            }
    return CheckReport{{f}};
}

CheckReport check_eval_homomorphism(const StructureTable& table, const std::vector<Rational>& gammas) {
    FamilyReport f{"evaluation homomorphism"};
    for (const auto& g : gammas)
        for (const auto& [key, value] : table.entries) {
            Matrix lhs = eval_image(value, g, table.spec);
            Matrix rhs = commutator(eval_image(key.first, g, table.spec), eval_image(key.second, g, table.spec));
            f.record(lhs == rhs, key.first.str() + ", " + key.second.str() + " at " + g.str());
        }
    return CheckReport{{f}};
}

CheckReport check_rank1_slice(const StructureTable& table) {
    const AlgebraSpec& spec = table.spec;
    FamilyReport f{"rank-1 slice"};
    std::vector<pbw::Generator> gens;
    for (std::uint32_t t = 0; t <= spec.N; ++t) {
        gens.push_back(pbw::Xm(t));
        gens.push_back(pbw::Jg(t));
        gens.push_back(pbw::Xp(t));
    }
    for (unsigned i = 1; i < spec.m; ++i) {
        auto iota = [&](const pbw::Generator& g) {
            switch (g.kind) {
                case pbw::Kind::Xplus: return xplus(i, g.degree);
                case pbw::Kind::Xminus: return xminus(i, g.degree);
                case pbw::Kind::J: break;
            }
            return jay(spec, i, g.degree);
        };
        for (const auto& g : gens)
            for (const auto& h : gens) {
                LieElement want;
                pbw::UEAElement rank1 = pbw::bracket_gen(g, h);
                for (const auto& [mono, coeff] : rank1.terms()) {
                    if (mono.length() != 1) throw InternalConsistency("rank-1 bracket left the generators");
                    want += iota(mono.word()[0]) * coeff.eval(spec.Qi(i));
                }
                f.record(bracket(iota(g), iota(h), table) == want,
                         "i=" + num(i) + " " + g.str() + ", " + h.str());
            }
    }
    return CheckReport{{f}};
}

CheckReport check_upsilon(const StructureTable& sl_table, StructureEngine& gl_engine) {
    FamilyReport hom{"upsilon homomorphism"};
    FamilyReport inj{"upsilon injective"};
    const AlgebraSpec& spec = sl_table.spec;
    if (spec.variant != Variant::sl || gl_engine.spec().variant != Variant::gl || gl_engine.spec().m != spec.m ||
        gl_engine.spec().Q != spec.Q)
        throw ValidationError("upsilon needs an sl table and a gl algebra with the same m and Q");
    for (const auto& [key, value] : sl_table.entries) {
        LieElement lhs = upsilon(value);
        LieElement rhs = gl_engine.bracket(upsilon(key.first), upsilon(key.second));
        hom.record(lhs == rhs, key.first.str() + ", " + key.second.str());
    }
    auto src = basis(spec, spec.N);
    auto dst = basis(gl_engine.spec(), spec.N);
    Matrix M(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        LieElement img = upsilon(src[c]);
        for (std::size_t r = 0; r < dst.size(); ++r) M(r, c) = img.coefficient(dst[r]);
    }
    inj.record(rank(M) == src.size(), "rank on degrees <= " + num(spec.N));
    return CheckReport{{hom, inj}};
}

PhiReport phi_isomorphism(const std::vector<unsigned>& composition, const std::vector<Rational>& Qhat, unsigned N) {
    if (composition.empty() || std::any_of(composition.begin(), composition.end(), [](unsigned c) { return c == 0; }))
        throw ValidationError("composition must be a nonempty tuple of positive integers");
    unsigned m = 0;
    for (unsigned c : composition) m += c;
    if (m < 2) throw ValidationError("composition must sum to at least 2");
    const std::size_t r = composition.size();
    if (Qhat.size() != r - 1)
        throw ValidationError("Qhat must have r-1 = " + std::to_string(r - 1) + " entries");
    for (std::size_t k = 0; k < Qhat.size(); ++k)
        if (Qhat[k].is_zero()) throw ValidationError("Qhat_" + std::to_string(k + 1) + " must be nonzero");

    PhiReport rep;
    rep.composition = composition;
    rep.Qhat = Qhat;
    rep.Q = induced_Q(composition, Qhat);
    for (unsigned n = 1; n <= m; ++n) rep.zeta_inverse.push_back(zeta_inverse(composition, n));

    // (m_k, k) with k < r: the block ends where the X^+ get rescaled
    auto block_end = [&](GammaIndex g) { return g.k < r && g.i == composition[g.k - 1]; };

    std::map<std::string, std::pair<std::string, Rational>> fwd, back;
    auto add = [](std::vector<GeneratorImage>& list, std::map<std::string, std::pair<std::string, Rational>>& map,
                  std::string s, std::string t, Rational c) {
        map[s] = {t, c};
        list.push_back({std::move(s), std::move(t), std::move(c)});
    };
    for (unsigned i = 1; i < m; ++i) {
        GammaIndex g = rep.zeta_inverse[i - 1];
        Rational c = block_end(g) ? -Qhat[g.k - 1].inverse() : Rational(1);
        add(rep.phi, fwd, "X+_" + num(i), "X+_" + g.str(), c);
        add(rep.phi, fwd, "X-_" + num(i), "X-_" + g.str(), 1);
    }
    for (unsigned j = 1; j <= m; ++j) add(rep.phi, fwd, "I_" + num(j), "I_" + rep.zeta_inverse[j - 1].str(), 1);
    for (unsigned i = 1; i < m; ++i) {
        GammaIndex g = rep.zeta_inverse[i - 1];
        unsigned z = zeta(composition, g);
        Rational c = block_end(g) ? -Qhat[g.k - 1] : Rational(1);
        add(rep.phi_inverse, back, "X+_" + g.str(), "X+_" + num(z), c);
        add(rep.phi_inverse, back, "X-_" + g.str(), "X-_" + num(z), 1);
    }
    for (unsigned j = 1; j <= m; ++j) {
        GammaIndex g = rep.zeta_inverse[j - 1];
        add(rep.phi_inverse, back, "I_" + g.str(), "I_" + num(zeta(composition, g)), 1);
    }

    rep.inverse_ok = true;
    auto round_trip = [&](const auto& first, const auto& second) {
        for (const auto& [src, img] : first) {
            auto it = second.find(img.first);
            if (it == second.end() || it->second.first != src || !(img.second * it->second.second).is_one())
                rep.inverse_ok = false;
        }
    };
    round_trip(back, fwd);
    round_trip(fwd, back);

    // images of the g_Qhat(m) generators inside gl^<Q>, indexed through zeta
    AlgebraSpec spec{m, Variant::gl, rep.Q, N};
    StructureEngine engine(spec);
    Presentation P = presentation_of(spec);
    P.xp = [&](unsigned i, unsigned t) {
        GammaIndex g = zeta_inverse(composition, i);
        Rational c = block_end(g) ? -Qhat[g.k - 1] : Rational(1);
        return xplus(i, t) * c;
    };
    P.plus_minus = [&](unsigned i, unsigned d) {
        GammaIndex g = zeta_inverse(composition, i);
        if (g.i != composition[g.k - 1]) return jay(spec, i, d);
        return jay(spec, i, d) * (-Qhat[g.k - 1]) + jay(spec, i, d + 1);
    };
    rep.relations = check_presentation(P, engine, N);
    return rep;
}

}  // namespace dcla::liealg
