#include "svf/oracle.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include <json.hpp>

#include "svf/errors.hpp"
#include "svf/print.hpp"
#include "svf/rng.hpp"

namespace svf {

namespace {

/// Sign of theta_A * theta_B brought to increasing order, 0 on a repeated
/// variable. Counted by explicit sorted insertion, deliberately not sharing
/// the kernel's merge-sign code: the structure-constant cross-check should
/// compare two genuinely independent sign computations.
int grassmann_sign(std::uint32_t a, std::uint32_t b) {
    if (a & b) return 0;
    std::vector<unsigned> word;
    for (unsigned i = 0; i < 32; ++i)
        if (a & (1u << i)) word.push_back(i);
    int swaps = 0;
    for (unsigned i = 0; i < 32; ++i) {
        if (!(b & (1u << i))) continue;
        std::size_t pos = word.size();
        while (pos > 0 && word[pos - 1] > i) --pos;
        swaps += static_cast<int>(word.size() - pos);
        word.insert(word.begin() + pos, i);
    }
    return (swaps & 1) ? -1 : 1;
}

/// Left derivative by theta_j (0-based) on a monomial mask: the variable is
/// removed with sign (-1)^(number of factors in front of it).
std::pair<int, std::uint32_t> left_derivative(std::uint32_t mask, unsigned j) {
    const std::uint32_t bit = std::uint32_t(1) << j;
    if (!(mask & bit)) return {0, 0};
    const int before = std::popcount(mask & (bit - 1));
    return {(before & 1) ? -1 : 1, mask & ~bit};
}

/// Coefficients of f on the 2^s Grassmann monomial masks.
std::vector<Rational> grassmann_coordinates(const SuperPolynomial& f, std::size_t s) {
    const auto& sig = f.signature();
    if (sig->even_count != 0 || sig->odd_count != s)
        throw SignatureMismatchError("element does not live over the purely odd signature being scanned");
    std::vector<Rational> v(std::size_t(1) << s, Rational(0));
    for (const auto& [mono, c] : f.terms()) v[mono.odd_mask] = c;
    return v;
}

/// Matrix of left multiplication by xi; column b holds xi * theta_b.
Mat multiplication_matrix(const std::vector<Rational>& xi, std::size_t s) {
    const std::size_t n = std::size_t(1) << s;
    Mat m(n, Row(n, Rational(0)));
    for (std::uint32_t a = 0; a < n; ++a) {
        if (xi[a] == 0) continue;
        for (std::uint32_t b = 0; b < n; ++b) {
            const int sign = grassmann_sign(a, b);
            if (sign) m[a | b][b] += Rational(sign) * xi[a];
        }
    }
    return m;
}

bool subspaces_equal(const Mat& a, const Mat& b) {
    if (a.size() != b.size()) return false;
    for (const auto& v : a)
        if (!in_row_space(b, v)) return false;
    return true;
}

} // namespace

DerivationBasis::DerivationBasis(std::size_t s) : s_(s) {
    if (s < 1) throw PreconditionError("the derivation basis needs at least one odd variable");
    if (s > 12) throw PreconditionError("dimension s*2^s is out of the supported range");
    std::vector<std::string> names;
    for (std::size_t j = 1; j <= s; ++j) names.push_back("theta" + std::to_string(j));
    sig_ = make_signature(0, s, {}, std::move(names));

    const std::uint32_t monomials = std::uint32_t(1) << s_;
    for (std::size_t j = 0; j < s_; ++j)
        for (std::uint32_t mask = 0; mask < monomials; ++mask) {
            VectorField b(sig_);
            SuperPolynomial coeff(sig_);
            coeff.add_term(Monomial{{}, mask}, Rational(1));
            b.set_coefficient(j, std::move(coeff));
            elements_.push_back(std::move(b));
        }

    // [m d_i, m' d_j] = (m * d_i(m')) d_j - (-1)^{|m d_i||m' d_j|} (m' * d_j(m)) d_i
    table_.assign(dim(), std::vector<std::vector<Entry>>(dim()));
    for (std::size_t alpha = 0; alpha < dim(); ++alpha) {
        const unsigned i = static_cast<unsigned>(alpha >> s_);
        const std::uint32_t m = static_cast<std::uint32_t>(alpha) & (monomials - 1);
        const bool alpha_odd = ((std::popcount(m) + 1) & 1) != 0;
        for (std::size_t beta = 0; beta < dim(); ++beta) {
            const unsigned j = static_cast<unsigned>(beta >> s_);
            const std::uint32_t mp = static_cast<std::uint32_t>(beta) & (monomials - 1);
            const bool beta_odd = ((std::popcount(mp) + 1) & 1) != 0;
            auto& entries = table_[alpha][beta];
            const auto accumulate = [&](std::size_t target, int value) {
                for (std::size_t k = 0; k < entries.size(); ++k) {
                    if (entries[k].target != target) continue;
                    entries[k].coeff += Rational(value);
                    if (entries[k].coeff == 0) entries.erase(entries.begin() + k);
                    return;
                }
                entries.push_back({target, Rational(value)});
            };
            auto [ds, dm] = left_derivative(mp, i);
            if (ds) {
                const int ms = grassmann_sign(m, dm);
                if (ms) accumulate(index(j, m | dm), ds * ms);
            }
            std::tie(ds, dm) = left_derivative(m, j);
            if (ds) {
                const int ms = grassmann_sign(mp, dm);
                const int koszul = (alpha_odd && beta_odd) ? 1 : -1;
                if (ms) accumulate(index(i, mp | dm), koszul * ds * ms);
            }
        }
    }
}

Parity DerivationBasis::element_parity(std::size_t idx) const {
    const std::uint32_t mask = static_cast<std::uint32_t>(idx) & ((std::uint32_t(1) << s_) - 1);
    return parity_of_count(static_cast<std::size_t>(std::popcount(mask)) + 1);
}

Row DerivationBasis::coordinates(const VectorField& x) const {
    const auto& sig = x.signature();
    if (sig->even_count != 0 || sig->odd_count != s_)
        throw SignatureMismatchError("field does not live over the purely odd signature being scanned");
    Row v(dim(), Rational(0));
    for (std::size_t slot = 0; slot < s_; ++slot)
        for (const auto& [mono, c] : x.coefficient(slot).terms()) v[index(slot, mono.odd_mask)] = c;
    return v;
}

VectorField DerivationBasis::field_of(const Row& v) const {
    if (v.size() != dim()) throw PreconditionError("coordinate row length does not match the basis");
    VectorField out(sig_);
    const std::uint32_t monomials = std::uint32_t(1) << s_;
    for (std::size_t slot = 0; slot < s_; ++slot) {
        SuperPolynomial coeff(sig_);
        for (std::uint32_t mask = 0; mask < monomials; ++mask) {
            const Rational& c = v[index(slot, mask)];
            if (c != 0) coeff.add_term(Monomial{{}, mask}, c);
        }
        out.set_coefficient(slot, std::move(coeff));
    }
    return out;
}

Row DerivationBasis::bracket_row(std::size_t idx, const Row& v) const {
    Row out(dim(), Rational(0));
    for (std::size_t beta = 0; beta < dim(); ++beta) {
        if (v[beta] == 0) continue;
        for (const auto& e : table_[idx][beta]) out[e.target] += v[beta] * e.coeff;
    }
    return out;
}

Subspace ideal_closure(const std::vector<VectorField>& generators, std::size_t s) {
    const DerivationBasis basis(s);
    Mat span;
    for (const auto& g : generators) span.push_back(basis.coordinates(g));
    rref(span);
    for (;;) {
        Mat grown = span;
        for (std::size_t alpha = 0; alpha < basis.dim(); ++alpha)
            for (const auto& v : span) grown.push_back(basis.bracket_row(alpha, v));
        const std::size_t before = span.size();
        rref(grown);
        span = std::move(grown);
        if (span.size() == before) break;
    }
    for (std::size_t alpha = 0; alpha < basis.dim(); ++alpha)
        for (const auto& v : span)
            if (!in_row_space(span, basis.bracket_row(alpha, v)))
                throw InternalVerificationError("ideal closure is not bracket-stable");
    return Subspace{std::move(span)};
}

namespace {

VectorField random_homogeneous_element(const DerivationBasis& basis, Rng& rng) {
    for (;;) {
        const Parity target = rng.coin() ? Parity::Odd : Parity::Even;
        Row v(basis.dim(), Rational(0));
        bool nonzero = false;
        for (std::size_t idx = 0; idx < basis.dim(); ++idx) {
            if (basis.element_parity(idx) != target) continue;
            const long c = rng.range(-3, 3);
            if (c != 0) {
                v[idx] = Rational(c);
                nonzero = true;
            }
        }
        if (nonzero) return basis.field_of(v);
    }
}

std::string render_report(const ScanReport& r) {
    std::ostringstream out;
    out << "simplicity scan: s=" << r.s << " trials=" << r.trials << " seed=" << r.seed << "\n";
    out << "dim of the derivation algebra: " << r.dim << "\n\n";
    std::size_t width = std::string("generator").size();
    for (const auto& row : r.table) width = std::max(width, row.generator.size());
    const auto pad = [](const std::string& text, std::size_t w) {
        return text + std::string(w - std::min(w, text.size()), ' ');
    };
    out << "  s  " << pad("generator", width) << "  closure dim  verdict\n";
    for (const auto& row : r.table)
        out << "  " << r.s << "  " << pad(row.generator, width) << "  "
            << pad(std::to_string(row.closure_dim), 11) << "  " << (row.proper ? "proper" : "full")
            << "\n";
    out << "\n";
    if (r.proper_found) {
        std::string basis_list;
        for (const auto& b : r.ideal_basis) basis_list += (basis_list.empty() ? "" : ", ") + b;
        out << "proper ideal found: " << basis_list << "\n";
        out << "the ideal above is bracket-stable, which disproves simplicity.\n";
    } else {
        out << "no proper ideal found among tested generators; dim " << r.dim << "\n";
        out << "this scan is evidence only, not a simplicity proof.\n";
    }
    return out.str();
}

} // namespace

ScanReport simplicity_scan(std::size_t s, std::size_t trials, std::uint64_t seed) {
    const DerivationBasis basis(s);
    ScanReport report;
    report.s = s;
    report.trials = trials;
    report.seed = seed;
    report.dim = basis.dim();

    Rng rng(seed);
    std::vector<VectorField> generators;
    for (std::size_t idx = 0; idx < basis.dim(); ++idx) generators.push_back(basis.element(idx));
    for (std::size_t t = 0; t < trials; ++t)
        generators.push_back(random_homogeneous_element(basis, rng));

    for (const auto& g : generators) {
        const Subspace closure = ideal_closure({g}, s);
        const bool proper = closure.dim() < basis.dim();
        report.table.push_back({print_field(g), closure.dim(), proper});
        if (proper && !report.proper_found) {
            report.proper_found = true;
            for (const auto& row : closure.rows)
                report.ideal_basis.push_back(print_field(basis.field_of(row)));
        }
    }
    report.text = render_report(report);
    return report;
}

std::string ideal_document(const ScanReport& report) {
    if (!report.proper_found) throw PreconditionError("the scan found no proper ideal to document");
    nlohmann::json j;
    j["s"] = report.s;
    j["seed"] = report.seed;
    j["dim"] = report.ideal_basis.size();
    j["basis"] = report.ideal_basis;
    return j.dump(2);
}

bool is_odd_regular(const SuperPolynomial& xi, std::size_t s) {
    if (s < 1) throw PreconditionError("regularity scans need at least one odd variable");
    if (!xi.is_parity_homogeneous(Parity::Odd))
        throw ParityError("odd regularity is defined for parity-odd elements");
    const Mat m = multiplication_matrix(grassmann_coordinates(xi, s), s);
    return subspaces_equal(kernel_basis(m), image_basis(m));
}

bool is_regular_sequence(const std::vector<SuperPolynomial>& seq, std::size_t s) {
    if (s < 1) throw PreconditionError("regularity scans need at least one odd variable");
    for (const auto& a : seq)
        if (!a.parity().has_value())
            throw ParityError("regular sequences are made of parity-homogeneous elements");

    const std::size_t n = std::size_t(1) << s;
    Mat ideal; // rref rows spanning the ideal generated by the elements seen so far
    for (const auto& a : seq) {
        const auto coords = grassmann_coordinates(a, s);

        // Standard monomials (non-pivot coordinates) represent the quotient.
        std::vector<bool> is_pivot(n, false);
        for (std::size_t p : pivot_columns(ideal))
            if (p < n) is_pivot[p] = true;
        std::vector<std::size_t> standard;
        for (std::size_t c = 0; c < n; ++c)
            if (!is_pivot[c]) standard.push_back(c);
        const std::size_t q = standard.size();

        const Mat full = multiplication_matrix(coords, s);
        Mat quo(q, Row(q, Rational(0)));
        for (std::size_t col = 0; col < q; ++col) {
            Row w(n, Rational(0));
            for (std::size_t i = 0; i < n; ++i) w[i] = full[i][standard[col]];
            reduce_against(ideal, w);
            for (std::size_t row = 0; row < q; ++row) quo[row][col] = w[standard[row]];
        }

        if (*a.parity() == Parity::Even) {
            Mat copy = quo;
            if (rref(copy) != q) return false;
        } else if (!subspaces_equal(kernel_basis(quo), image_basis(quo))) {
            return false;
        }

        // Grow the ideal by every monomial multiple of the element.
        for (std::uint32_t mask = 0; mask < n; ++mask) {
            Row w(n, Rational(0));
            bool nonzero = false;
            for (std::uint32_t b = 0; b < n; ++b) {
                if (coords[b] == 0) continue;
                const int sign = grassmann_sign(mask, b);
                if (sign) {
                    w[mask | b] += Rational(sign) * coords[b];
                    nonzero = true;
                }
            }
            if (nonzero) ideal.push_back(std::move(w));
        }
        rref(ideal);
    }
    return true;
}

} // namespace svf
