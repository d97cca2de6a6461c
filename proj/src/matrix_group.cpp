#include "glatt/matrix_group.hpp"

#include "glatt/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace glatt {

bool Subgroup::contains(std::size_t idx) const {
    return std::binary_search(members.begin(), members.end(), idx);
}

std::string Subgroup::to_string() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i)
            out << ',';
        out << members[i];
    }
    out << '}';
    return out.str();
}

FiniteMatrixGroup FiniteMatrixGroup::close(std::size_t dim, std::vector<IntMatrix> generators,
                                           std::size_t cap) {
    for (const auto& g : generators) {
        if (g.rows() != dim || g.cols() != dim)
            throw ValidationError("close_group: generator is not " + std::to_string(dim) + "x" +
                                  std::to_string(dim));
        Int d = g.det();
        if (d != 1 && d != -1)
            throw NotInvertibleError("close_group: generator with determinant " + d.str() +
                                     " is not in GL(n,Z)");
    }
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    FiniteMatrixGroup g;
    g.dim_ = dim;
    g.cap_ = cap;
    g.elements_.push_back(IntMatrix::identity(dim));
    std::map<IntMatrix, std::size_t> index{{g.elements_[0], 0}};
    for (std::size_t i = 0; i < g.elements_.size(); ++i) {
        for (const auto& gen : generators) {
            IntMatrix p = g.elements_[i] * gen;
            if (index.emplace(p, g.elements_.size()).second) {
                g.elements_.push_back(std::move(p));
                if (g.elements_.size() > cap)
                    throw OrderCapExceededError(
                        "close_group: closure exceeded the order cap of " + std::to_string(cap));
            }
        }
    }

    const std::size_t n = g.elements_.size();
    g.mul_table_.assign(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            auto it = index.find(g.elements_[a] * g.elements_[b]);
            if (it == index.end())
                throw InternalInconsistencyError("close_group: set not closed under products");
            g.mul_table_[a][b] = it->second;
        }
    g.inverse_table_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (g.mul_table_[a][b] == 0) {
                g.inverse_table_[a] = b;
                break;
            }
        if (g.inverse_table_[a] == n)
            throw InternalInconsistencyError("close_group: element without inverse");
    }
    for (const auto& gen : generators)
        g.generator_indices_.push_back(index.at(gen));
    return g;
}

std::size_t FiniteMatrixGroup::index_of(const IntMatrix& m) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i] == m)
            return i;
    throw ValidationError("index_of: matrix is not a group element");
}

Subgroup FiniteMatrixGroup::full_subgroup() const {
    Subgroup s;
    s.members.resize(order());
    for (std::size_t i = 0; i < order(); ++i)
        s.members[i] = i;
    return s;
}

Subgroup FiniteMatrixGroup::generated_subgroup(const std::vector<std::size_t>& seed) const {
    std::set<std::size_t> closure{0};
    std::vector<std::size_t> work{0};
    for (std::size_t s : seed)
        if (closure.insert(s).second)
            work.push_back(s);
    for (std::size_t i = 0; i < work.size(); ++i)
        for (std::size_t j = 0; j < work.size(); ++j) {
            std::size_t p = mul(work[i], work[j]);
            if (closure.insert(p).second)
                work.push_back(p);
        }
    return Subgroup{{closure.begin(), closure.end()}};
}

Subgroup FiniteMatrixGroup::conjugate(const Subgroup& s, std::size_t by) const {
    const std::size_t inv = inverse(by);
    std::vector<std::size_t> out;
    out.reserve(s.members.size());
    for (std::size_t m : s.members)
        out.push_back(mul(mul(by, m), inv));
    std::sort(out.begin(), out.end());
    return Subgroup{std::move(out)};
}

std::vector<Subgroup> enumerate_subgroups(const FiniteMatrixGroup& g) {
    std::set<std::vector<std::size_t>> found;
    for (std::size_t i = 0; i < g.order(); ++i)
        found.insert(g.generated_subgroup({i}).members);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<std::size_t>> current(found.begin(), found.end());
        for (std::size_t a = 0; a < current.size(); ++a)
            for (std::size_t b = a + 1; b < current.size(); ++b) {
                std::vector<std::size_t> seed = current[a];
                seed.insert(seed.end(), current[b].begin(), current[b].end());
                if (found.insert(g.generated_subgroup(seed).members).second)
                    grew = true;
            }
    }
    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (auto& m : found)
        out.push_back(Subgroup{m});
    std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
        return std::pair(x.order(), x.members) < std::pair(y.order(), y.members);
    });
    return out;
}

SubgroupClasses subgroup_classes(const FiniteMatrixGroup& g) {
    SubgroupClasses sc;
    sc.subgroups = enumerate_subgroups(g);
    const std::size_t n = sc.subgroups.size();
    auto index_of_subgroup = [&](const Subgroup& s) {
        auto it = std::lower_bound(sc.subgroups.begin(), sc.subgroups.end(), s,
                                   [](const Subgroup& x, const Subgroup& y) {
                                       return std::pair(x.order(), x.members) <
                                              std::pair(y.order(), y.members);
                                   });
        return static_cast<std::size_t>(it - sc.subgroups.begin());
    };
    sc.class_rep.assign(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sc.class_rep[i] != n)
            continue;
        // subgroups are sorted, so the first unseen member is its class's
        // minimal (order, members) representative
        for (std::size_t by = 0; by < g.order(); ++by) {
            std::size_t j = index_of_subgroup(g.conjugate(sc.subgroups[i], by));
            sc.class_rep[j] = i;
        }
        sc.reps.push_back(i);
    }
    return sc;
}

} // namespace glatt
