#include "glatt/hom_search.hpp"

#include "glatt/errors.hpp"
#include "glatt/normal_forms.hpp"

#include <atomic>
#include <functional>
#include <limits>

namespace glatt {

std::vector<IntMatrix> equivariant_homs(const GLattice& m, const GLattice& n) {
    if (!m.same_group(n))
        throw GroupMismatchError("equivariant_homs: lattices over different groups");
    const std::size_t rm = m.rank();
    const std::size_t rn = n.rank();
    const std::size_t unknowns = rn * rm; // X is rn x rm, vectorized row-major
    const auto& gens = m.group().generator_indices();
    IntMatrix c(gens.size() * unknowns, unknowns);
    std::size_t row = 0;
    for (std::size_t g : gens) {
        const IntMatrix& am = m.action(g);
        const IntMatrix& an = n.action(g);
        // (X * am - an * X)(i,j) = 0
        for (std::size_t i = 0; i < rn; ++i)
            for (std::size_t j = 0; j < rm; ++j) {
                for (std::size_t k = 0; k < rm; ++k)
                    c(row, i * rm + k) += am(k, j);
                for (std::size_t k = 0; k < rn; ++k)
                    c(row, k * rm + j) -= an(i, k);
                ++row;
            }
    }
    IntMatrix kern = kernel_basis(c);
    std::vector<IntMatrix> basis;
    basis.reserve(kern.cols());
    for (std::size_t b = 0; b < kern.cols(); ++b) {
        IntMatrix x(rn, rm);
        for (std::size_t i = 0; i < rn; ++i)
            for (std::size_t j = 0; j < rm; ++j)
                x(i, j) = kern(i * rm + j, b);
        basis.push_back(std::move(x));
    }
    return basis;
}

namespace {

// number of vectors in [-s,s]^k, saturating
std::uint64_t shell_volume(long s, std::size_t k) {
    const std::uint64_t side = 2 * static_cast<std::uint64_t>(s) + 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / side)
            return std::numeric_limits<std::uint64_t>::max();
        total *= side;
    }
    return total;
}

void decode(std::uint64_t idx, long s, std::size_t k, std::vector<long>& out) {
    const std::uint64_t side = 2 * static_cast<std::uint64_t>(s) + 1;
    for (std::size_t i = k; i-- > 0;) {
        out[i] = static_cast<long>(idx % side) - s;
        idx /= side;
    }
}

bool on_shell(const std::vector<long>& c, long s) {
    if (s == 0)
        return true;
    for (long v : c)
        if (v == s || v == -s)
            return true;
    return false;
}

IntMatrix combine(const std::vector<IntMatrix>& basis, const std::vector<long>& c) {
    IntMatrix x(basis[0].rows(), basis[0].cols());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (c[i] == 0)
            continue;
        for (std::size_t r = 0; r < x.rows(); ++r)
            for (std::size_t j = 0; j < x.cols(); ++j)
                if (basis[i](r, j) != 0)
                    x(r, j) += Int(c[i]) * basis[i](r, j);
    }
    return x;
}

} // namespace

std::optional<WitnessHit>
scan_combinations(const std::vector<IntMatrix>& basis, SearchLimits limits,
                  const std::function<bool(const std::vector<long>&, const IntMatrix&)>& fn) {
    if (basis.empty())
        return std::nullopt;
    const std::size_t k = basis.size();
    std::uint64_t budget = limits.budget;
    std::vector<long> c(k);
    for (long s = 0; s <= limits.coeff_bound; ++s) {
        const std::uint64_t total = shell_volume(s, k);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            if (budget == 0)
                return std::nullopt;
            --budget;
            decode(idx, s, k, c);
            if (!on_shell(c, s))
                continue;
            IntMatrix x = combine(basis, c);
            if (fn(c, x))
                return WitnessHit{c, std::move(x)};
        }
    }
    return std::nullopt;
}

std::optional<WitnessHit> find_unimodular_combination_serial(const std::vector<IntMatrix>& basis,
                                                             SearchLimits limits) {
    return scan_combinations(basis, limits,
                             [](const std::vector<long>&, const IntMatrix& x) {
                                 return x.is_square() && is_unimodular(x);
                             });
}

std::optional<WitnessHit> find_unimodular_combination_parallel(const std::vector<IntMatrix>& basis,
                                                               SearchLimits limits) {
    if (basis.empty())
        return std::nullopt;
    if (!basis[0].is_square())
        return std::nullopt;
    const std::size_t k = basis.size();
    std::uint64_t budget = limits.budget;
    for (long s = 0; s <= limits.coeff_bound; ++s) {
        const std::uint64_t total = std::min(shell_volume(s, k), budget);
        std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
#pragma omp parallel
        {
            std::vector<long> c(k);
#pragma omp for schedule(dynamic, 512)
            for (long long idx = 0; idx < static_cast<long long>(total); ++idx) {
                const std::uint64_t u = static_cast<std::uint64_t>(idx);
                if (u >= best.load(std::memory_order_relaxed))
                    continue;
                decode(u, s, k, c);
                if (!on_shell(c, s))
                    continue;
                IntMatrix x = combine(basis, c);
                if (is_unimodular(x)) {
                    std::uint64_t cur = best.load(std::memory_order_relaxed);
                    while (u < cur && !best.compare_exchange_weak(cur, u)) {
                    }
                }
            }
        }
        if (best.load() != std::numeric_limits<std::uint64_t>::max()) {
            std::vector<long> c(k);
            decode(best.load(), s, k, c);
            return WitnessHit{c, combine(basis, c)};
        }
        budget -= total;
        if (budget == 0)
            return std::nullopt;
    }
    return std::nullopt;
}

std::optional<WitnessHit> find_unimodular_combination(const std::vector<IntMatrix>& basis,
                                                      SearchLimits limits) {
    return find_unimodular_combination_parallel(basis, limits);
}

} // namespace glatt
