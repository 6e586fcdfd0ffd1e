#include "plurikit/bases.hpp"

#include <algorithm>

#include "plurikit/genfun.hpp"
#include "plurikit/series.hpp"

namespace plurikit {

bool kappa_in_Xi(const BigRational& q, const Bidegree& ab) {
    if (!q.is_integer()) return false;
    for (size_t i = 0; i < ab.a.size(); ++i) {
        BigRational lo(2 - (ab.a[i] + ab.b[i]));
        BigRational hi(1 - std::max(ab.a[i], ab.b[i]));
        if (!(q < lo) && !(hi < q)) return true;
    }
    return false;
}

bool kappa_in_Z_below(const BigRational& q, int n) {
    return q.is_integer() && q < BigRational(n);
}

Poly t_power(const MultiIndex& nu, const Ambient& amb, const KappaCtx&) {
    return Poly::monomial(nu.to_monomial(VarFamily::T), KappaRational(1), amb);
}

namespace {

Bidegree bidegree_of(const MultiIndex& nu) {
    return Bidegree{nu.row_sums(), nu.col_sums()};
}

void check_bidegree(const Poly& p, const Bidegree& ab) {
    if (p.is_zero()) return;
    auto split = p.bidegree_split();
    if (split.size() != 1 || !(split.begin()->first == ab))
        raise(ErrorCode::BadInput, "polynomial is not of the stated bidegree");
}

}  // namespace

Poly project_Pi(const Poly& p, const Bidegree& ab, const KappaCtx& ctx) {
    check_bidegree(p, ab);
    if (ctx.specialized() && kappa_in_Xi(*ctx.value, ab))
        raise(ErrorCode::PoleAtKappa,
              "kappa = " + ctx.value->str() + " lies in the excluded set of the projection");
    const KappaRational kappa = ctx.k();
    Poly out = p;
    const int n = static_cast<int>(ab.a.size());
    for (int i = 1; i <= n; ++i) {
        int bound = std::min(ab.a[i - 1], ab.b[i - 1]);
        Poly acc = out;
        Poly power = out;
        KappaRational coeff(1);
        for (int j = 1; j <= bound; ++j) {
            power = apply_D(i, i, power, kappa);
            if (power.is_zero()) break;
            // coeff picks up -1 / (j * (a_i + b_i + kappa - 2 - (j-1))).
            coeff = -coeff / (KappaRational(j) *
                              (KappaRational(ab.a[i - 1] + ab.b[i - 1] - 2) + kappa -
                               KappaRational(j - 1)));
            Poly tpow = Poly::var(VarId::t(i, i), p.ambient()).pow(j);
            acc = acc + (tpow * power).scaled(coeff);
        }
        out = acc;
    }
    return out;
}

Poly reconstruct_from_seed(const std::map<MultiIndex, KappaRational>& seed,
                           const Bidegree& ab, const Ambient& amb,
                           const KappaCtx& ctx) {
    const int n = static_cast<int>(ab.a.size());
    if (ctx.specialized() && kappa_in_Xi(*ctx.value, ab))
        raise(ErrorCode::PoleAtKappa,
              "kappa = " + ctx.value->str() + " lies in the excluded set Xi");
    const KappaRational kappa = ctx.k();

    std::vector<MultiIndex> all = enumerate_N(ab);
    Partition triv = Partition::trivial(n);
    for (const auto& [nu, c] : seed) {
        if (!nu.diagonal_free() || !(bidegree_of(nu) == ab))
            raise(ErrorCode::BadInput, "seed entry outside the diagonal-free index set");
    }

    auto diag_total = [n](const MultiIndex& nu) {
        int d = 0;
        for (int i = 1; i <= n; ++i) d += nu.at(i, i);
        return d;
    };
    std::sort(all.begin(), all.end(), [&](const MultiIndex& x, const MultiIndex& y) {
        int dx = diag_total(x), dy = diag_total(y);
        return dx != dy ? dx < dy : x < y;
    });

    std::map<MultiIndex, KappaRational> coeff;
    for (const MultiIndex& nu : all) {
        if (diag_total(nu) == 0) {
            auto it = seed.find(nu);
            if (it != seed.end()) coeff[nu] = it->second;
            continue;
        }
        int i = 1;
        while (nu.at(i, i) == 0) ++i;
        MultiIndex mu = nu.plus(i, i, -1);
        KappaRational num;
        for (int k = 1; k <= n; ++k) {
            if (k == i) continue;
            for (int l = 1; l <= n; ++l) {
                if (l == i || mu.at(k, l) < 1) continue;
                MultiIndex src = mu.plus(i, l).plus(k, i).plus(k, l, -1);
                auto it = coeff.find(src);
                if (it == coeff.end()) continue;
                num += KappaRational((mu.at(i, l) + 1) * (mu.at(k, i) + 1)) * it->second;
            }
        }
        if (num.is_zero()) continue;
        KappaRational den =
            KappaRational(mu.at(i, i) + 1) *
            (KappaRational(ab.a[i - 1] + ab.b[i - 1] - mu.at(i, i) - 2) + kappa);
        coeff[nu] = -num / den;
    }

    Poly out(amb);
    for (const auto& [nu, c] : coeff) out.add_term(nu.to_monomial(VarFamily::T), c);
    return out;
}

namespace {

BasisMap monomial_basis_plain(const Bidegree& ab, const KappaCtx& ctx, const Ambient& amb) {
    BasisMap out;
    Partition triv = Partition::trivial(static_cast<int>(ab.a.size()));
    for (const MultiIndex& nu : enumerate_N0(ab, triv))
        out.emplace(nu, project_Pi(t_power(nu, amb), ab, ctx));
    return out;
}

}  // namespace

BasisMap monomial_basis(const Bidegree& ab, const Partition& partition, const KappaCtx& ctx) {
    const int n = static_cast<int>(ab.a.size());
    Ambient amb{n};
    if (partition.n() != n)
        raise(ErrorCode::BadInput, "partition does not match bidegree length");
    BasisMap plain = monomial_basis_plain(ab, ctx, amb);
    if (partition.is_trivial()) return plain;

    if (ctx.specialized() && kappa_in_Z_below(*ctx.value, n))
        raise(ErrorCode::PoleAtKappa,
              "kappa = " + ctx.value->str() + " is an excluded integer below n");

    // Correct each plain element by the span of the indices that must
    // vanish on the block diagonal, via the Gram system.
    std::vector<MultiIndex> inside;   // stays in the partition basis
    std::vector<MultiIndex> outside;  // correction directions
    for (const auto& [nu, p] : plain) {
        bool ok = true;
        for (int i = 1; i <= n && ok; ++i)
            for (int j = 1; j <= n && ok; ++j)
                if (partition.in_I(i, j) && nu.at(i, j) != 0) ok = false;
        (ok ? inside : outside).push_back(nu);
    }
    BasisMap out;
    if (inside.empty()) return out;
    if (outside.empty()) {
        for (const auto& nu : inside) out.emplace(nu, plain.at(nu));
        return out;
    }

    const KappaRational kappa = ctx.k();
    KMatrix G(outside.size(), std::vector<KappaRational>(outside.size()));
    for (size_t r = 0; r < outside.size(); ++r)
        for (size_t c = 0; c < outside.size(); ++c)
            G[r][c] = inner_product(plain.at(outside[r]), plain.at(outside[c]), kappa);
    KMatrix rhs(outside.size(), std::vector<KappaRational>(inside.size()));
    for (size_t r = 0; r < outside.size(); ++r)
        for (size_t c = 0; c < inside.size(); ++c)
            rhs[r][c] = -inner_product(plain.at(outside[r]), plain.at(inside[c]), kappa);
    KMatrix X;
    try {
        X = solve_exact(G, rhs);
    } catch (const DomainError& e) {
        if (e.code() == ErrorCode::SingularSystem)
            raise(ErrorCode::SingularGram, "Gram system singular at this kappa");
        throw;
    }
    for (size_t c = 0; c < inside.size(); ++c) {
        Poly p = plain.at(inside[c]);
        for (size_t r = 0; r < outside.size(); ++r)
            p = p + plain.at(outside[r]).scaled(X[r][c]);
        out.emplace(inside[c], p);
    }
    return out;
}

namespace {

struct DescendingBuilder {
    const KappaCtx& ctx;
    int n;
    Ambient amb;
    std::map<std::pair<std::vector<int>, std::vector<int>>, BasisMap> cache;

    BasisMap& build(const Bidegree& ab) {
        auto key = std::make_pair(ab.a, ab.b);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;

        BasisMap out;
        Partition triv = Partition::trivial(n);
        std::vector<MultiIndex> nus = enumerate_N0(ab, triv);
        if (ab.total() == 0) {
            if (!nus.empty())
                out.emplace(MultiIndex::zero(n), Poly::constant(KappaRational(1), amb));
            return cache.emplace(key, std::move(out)).first->second;
        }
        if (nus.empty()) return cache.emplace(key, std::move(out)).first->second;

        BasisMap mono = monomial_basis_plain(ab, ctx, amb);
        const KappaRational kappa = ctx.k();

        // Rows: one equation per (i, j) and per target index of the lower
        // space. Columns: monomial-basis coordinates of the unknown.
        std::vector<std::vector<KappaRational>> A;
        std::vector<std::vector<KappaRational>> B;
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                if (i == j || ab.a[i - 1] == 0 || ab.b[j - 1] == 0) continue;
                Bidegree low = ab;
                low.a[i - 1] -= 1;
                low.b[j - 1] -= 1;
                std::vector<MultiIndex> targets = enumerate_N0(low, triv);
                if (targets.empty()) continue;
                BasisMap& lower = build(low);

                std::vector<Poly> images;
                images.reserve(nus.size());
                for (const MultiIndex& mu : nus)
                    images.push_back(apply_D(i, j, mono.at(mu), kappa));

                for (const MultiIndex& xi : targets) {
                    Monomial target = xi.to_monomial(VarFamily::T);
                    std::vector<KappaRational> row;
                    row.reserve(nus.size());
                    for (const Poly& im : images) row.push_back(im.coefficient(target));
                    std::vector<KappaRational> rhs;
                    rhs.reserve(nus.size());
                    for (const MultiIndex& nu : nus) {
                        if (nu.at(i, j) == 0) {
                            rhs.push_back(KappaRational());
                        } else {
                            const Poly& prev = lower.at(nu.plus(i, j, -1));
                            rhs.push_back(prev.coefficient(target));
                        }
                    }
                    A.push_back(std::move(row));
                    B.push_back(std::move(rhs));
                }
            }
        }

        KMatrix X = solve_exact(A, B);
        for (size_t c = 0; c < nus.size(); ++c) {
            Poly p(amb);
            size_t r = 0;
            for (const MultiIndex& mu : nus) {
                p = p + mono.at(mu).scaled(X[r][c]);
                ++r;
            }
            out.emplace(nus[c], p);
        }
        return cache.emplace(key, std::move(out)).first->second;
    }
};

}  // namespace

BasisMap descending_basis(const Bidegree& ab, const Partition& partition,
                          DescendingMethod method, const KappaCtx& ctx) {
    const int n = static_cast<int>(ab.a.size());
    if (partition.n() != n)
        raise(ErrorCode::BadInput, "partition does not match bidegree length");
    if (ctx.specialized() && kappa_in_Z_below(*ctx.value, n))
        raise(ErrorCode::PoleAtKappa,
              "kappa = " + ctx.value->str() + " is an excluded integer below n");

    BasisMap full;
    if (method == DescendingMethod::linear_solve) {
        DescendingBuilder builder{ctx, n, Ambient{n}};
        full = builder.build(ab);
    } else {
        int d = ab.total();
        TruncatedSeries g = build_G(n, seed_A(d, ctx), d, ctx);
        auto extracted = substitute_and_extract(g, n, partition, d, false);
        KappaRational norm = asc_poch(ctx.k(), d) * asc_poch(ctx.k() - KappaRational(1), d);
        for (auto& [nu, p] : extracted) {
            if (!(bidegree_of(nu) == ab)) continue;
            full.emplace(nu, p.scaled(norm.inverse()));
        }
        return full;
    }

    // The restriction of the same family to the partition's admissible
    // indices is the partition basis; no new solve.
    if (partition.is_trivial()) return full;
    BasisMap out;
    for (const auto& [nu, p] : full) {
        bool ok = true;
        for (int i = 1; i <= n && ok; ++i)
            for (int j = 1; j <= n && ok; ++j)
                if (partition.in_I(i, j) && nu.at(i, j) != 0) ok = false;
        if (ok) out.emplace(nu, p);
    }
    return out;
}

KMatrix gram_matrix(const BasisMap& rows, const BasisMap& cols, const KappaCtx& ctx) {
    const KappaRational kappa = ctx.k();
    KMatrix G;
    G.reserve(rows.size());
    for (const auto& [mu, p] : rows) {
        std::vector<KappaRational> row;
        row.reserve(cols.size());
        for (const auto& [nu, q] : cols) row.push_back(inner_product(p, q, kappa));
        G.push_back(std::move(row));
    }
    return G;
}

KMatrix gram_matrix_via_D(const BasisMap& rows, const BasisMap& cols, const KappaCtx& ctx) {
    const KappaRational kappa = ctx.k();
    KMatrix G;
    G.reserve(rows.size());
    for (const auto& [mu, p] : rows) {
        std::vector<KappaRational> row;
        row.reserve(cols.size());
        for (const auto& [nu, q] : cols) {
            Poly image = p;
            for (int i = 1; i <= nu.n() && !image.is_zero(); ++i)
                for (int j = 1; j <= nu.n() && !image.is_zero(); ++j)
                    for (int r = 0; r < nu.at(i, j); ++r)
                        image = apply_D(i, j, image, kappa);
            row.push_back(image.constant_term());
        }
        G.push_back(std::move(row));
    }
    return G;
}

}  // namespace plurikit
