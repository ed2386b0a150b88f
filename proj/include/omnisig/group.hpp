#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

namespace omnisig {

class group_error : public std::runtime_error {
public:
    explicit group_error(const std::string& what) : std::runtime_error(what) {}
};

/// Bijection on points 0..d-1 (1-indexed only at I/O boundaries).
struct Permutation {
    std::vector<int> images;

    static Permutation identity(int degree) {
        Permutation p;
        p.images.resize(degree);
        for (int i = 0; i < degree; ++i) p.images[i] = i;
        return p;
    }

    int degree() const { return static_cast<int>(images.size()); }

    bool valid() const {
        std::vector<char> seen(images.size(), 0);
        for (int v : images) {
            if (v < 0 || v >= degree() || seen[v]) return false;
            seen[v] = 1;
        }
        return true;
    }

    /// (*this) applied after `other`.
    Permutation after(const Permutation& other) const {
        Permutation out;
        out.images.resize(images.size());
        for (int i = 0; i < degree(); ++i) out.images[i] = images[other.images[i]];
        return out;
    }

    Permutation inverse() const {
        Permutation out;
        out.images.resize(images.size());
        for (int i = 0; i < degree(); ++i) out.images[images[i]] = i;
        return out;
    }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (images[i] != i) return false;
        return true;
    }

    friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

/// An explicit finite permutation group: full element table built by
/// generator closure. Immutable after construction; safe to share.
///
/// Elements are kept sorted lexicographically by image sequence; every
/// "deterministic choice" below refers to that order. Groups up to order
/// 512 get a full product table at construction, larger ones multiply by
/// composing images and binary-searching the element table.
class FiniteGroup {
public:
    static constexpr std::size_t kDefaultOrderCap = 100000;
    static constexpr std::size_t kProductTableMaxOrder = 512;

    static FiniteGroup from_generators(std::string name, int degree,
                                       std::vector<Permutation> generators,
                                       std::size_t order_cap = kDefaultOrderCap) {
        if (degree < 1) throw group_error("from_generators: degree must be >= 1");
        if (order_cap < 1) throw group_error("from_generators: order cap must be >= 1");
        for (const Permutation& g : generators) {
            if (g.degree() != degree)
                throw group_error("from_generators: generator degree mismatch in group '" +
                                  name + "'");
            if (!g.valid())
                throw group_error("from_generators: generator is not a permutation in group '" +
                                  name + "'");
        }
        return FiniteGroup(std::move(name), degree, std::move(generators), order_cap);
    }

    static FiniteGroup cyclic(std::int64_t n) {
        if (n < 1) throw group_error("cyclic: n must be >= 1");
        const int d = static_cast<int>(std::max<std::int64_t>(n, 1));
        Permutation rot = Permutation::identity(d);
        if (n > 1)
            for (int i = 0; i < d; ++i) rot.images[i] = (i + 1) % d;
        return from_generators("C_" + std::to_string(n), d, {rot});
    }

    static FiniteGroup dihedral(std::int64_t n) {
        if (n < 1) throw group_error("dihedral: n must be >= 1");
        const std::string name = "D_" + std::to_string(n);
        if (n == 1) {
            // D_1 = C_2: x trivial, y a transposition.
            Permutation x = Permutation::identity(2);
            Permutation y = Permutation::identity(2);
            std::swap(y.images[0], y.images[1]);
            return from_generators(name, 2, {x, y});
        }
        if (n == 2) {
            // D_2 = C_2 x C_2 on 4 points.
            Permutation x = Permutation::identity(4);
            std::swap(x.images[0], x.images[1]);
            Permutation y = Permutation::identity(4);
            std::swap(y.images[2], y.images[3]);
            return from_generators(name, 4, {x, y});
        }
        const int d = static_cast<int>(n);
        Permutation x = Permutation::identity(d);
        for (int i = 0; i < d; ++i) x.images[i] = (i + 1) % d;
        Permutation y = Permutation::identity(d);
        for (int i = 0; i < d; ++i) y.images[i] = (d - i) % d;
        return from_generators(name, d, {x, y});
    }

    static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
        const int d = g.degree() + h.degree();
        std::vector<Permutation> gens;
        for (int gi : g.generator_indices()) {
            Permutation p = Permutation::identity(d);
            for (int i = 0; i < g.degree(); ++i) p.images[i] = g.elements()[gi].images[i];
            gens.push_back(std::move(p));
        }
        for (int hi : h.generator_indices()) {
            Permutation p = Permutation::identity(d);
            for (int i = 0; i < h.degree(); ++i)
                p.images[g.degree() + i] = g.degree() + h.elements()[hi].images[i];
            gens.push_back(std::move(p));
        }
        const std::size_t cap = g.order() * h.order();
        FiniteGroup out = from_generators(g.name() + " x " + h.name(), d, std::move(gens),
                                          std::max<std::size_t>(cap, 1));
        if (out.order() != g.order() * h.order())
            throw group_error("direct_product: closure order mismatch");
        return out;
    }

    const std::string& name() const { return name_; }
    int degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& elements() const { return elements_; }
    int identity() const { return identity_; }
    const std::vector<int>& generator_indices() const { return gen_idx_; }

    int index_of(const Permutation& p) const {
        const auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
        if (it == elements_.end() || !(*it == p))
            throw group_error("element not in group '" + name_ + "'");
        return static_cast<int>(it - elements_.begin());
    }

    bool contains(const Permutation& p) const {
        const auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
        return it != elements_.end() && *it == p;
    }

    int mul(int a, int b) const {
        if (!table_.empty()) return static_cast<int>(table_[a * order() + b]);
        return index_of(elements_[a].after(elements_[b]));
    }

    int inv(int a) const { return inverse_[a]; }

    int power(int a, std::int64_t k) const {
        const std::int64_t n = order_[a];
        k %= n;
        if (k < 0) k += n;
        int acc = identity_;
        int base = a;
        while (k > 0) {
            if (k & 1) acc = mul(acc, base);
            base = mul(base, base);
            k >>= 1;
        }
        return acc;
    }

    /// Least k >= 1 with element^k = identity.
    std::int64_t element_order(int a) const {
        if (a < 0 || static_cast<std::size_t>(a) >= order())
            throw group_error("element_order: index out of range");
        return order_[a];
    }

    std::int64_t element_order(const Permutation& p) const { return order_[index_of(p)]; }

    std::vector<int> elements_of_order(std::int64_t m) const {
        std::vector<int> out;
        for (std::size_t i = 0; i < order_.size(); ++i)
            if (order_[i] == m) out.push_back(static_cast<int>(i));
        return out;
    }

    /// Closure of `subset` equals the whole group?
    bool generates(const std::vector<int>& subset) const {
        return closure_size(subset, order()) == order();
    }

    /// Order of the subgroup generated by `subset`.
    std::size_t generated_subgroup_order(const std::vector<int>& subset) const {
        return closure_size(subset, order());
    }

    /// One element per conjugacy class; the representative is the least
    /// class member in canonical order.
    std::vector<int> conjugacy_class_representatives() const {
        std::vector<char> seen(order(), 0);
        std::vector<int> reps;
        for (std::size_t i = 0; i < order(); ++i) {
            if (seen[i]) continue;
            reps.push_back(static_cast<int>(i));
            // Orbit of i under conjugation by generators covers its class.
            std::deque<int> queue{static_cast<int>(i)};
            seen[i] = 1;
            while (!queue.empty()) {
                const int e = queue.front();
                queue.pop_front();
                for (int g : gen_idx_) {
                    const int c = mul(mul(g, e), inv(g));
                    if (!seen[c]) {
                        seen[c] = 1;
                        queue.push_back(c);
                    }
                }
            }
        }
        return reps;
    }

private:
    FiniteGroup(std::string name, int degree, std::vector<Permutation> generators,
                std::size_t order_cap)
        : name_(std::move(name)), degree_(degree) {
        // Breadth-first product closure from the identity.
        std::vector<Permutation> closure{Permutation::identity(degree)};
        std::vector<Permutation> sorted = closure;
        std::size_t frontier = 0;
        while (frontier < closure.size()) {
            const Permutation e = closure[frontier++];
            for (const Permutation& g : generators) {
                Permutation next = g.after(e);
                const auto it = std::lower_bound(sorted.begin(), sorted.end(), next);
                if (it != sorted.end() && *it == next) continue;
                if (closure.size() >= order_cap)
                    throw group_error("closure of group '" + name_ + "' exceeds cap " +
                                      std::to_string(order_cap));
                sorted.insert(it, next);
                closure.push_back(std::move(next));
            }
        }
        elements_ = std::move(sorted);

        const std::size_t n = elements_.size();
        identity_ = index_of(Permutation::identity(degree));
        inverse_.resize(n);
        order_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            inverse_[i] = index_of(elements_[i].inverse());
            std::int64_t k = 1;
            Permutation acc = elements_[i];
            while (!acc.is_identity()) {
                acc = elements_[i].after(acc);
                ++k;
            }
            order_[i] = k;
        }
        for (const Permutation& g : generators) gen_idx_.push_back(index_of(g));

        if (n <= kProductTableMaxOrder) {
            table_.resize(n * n);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    table_[a * n + b] =
                        static_cast<std::uint32_t>(index_of(elements_[a].after(elements_[b])));
        }
    }

    std::size_t closure_size(const std::vector<int>& subset, std::size_t stop_at) const {
        for (int e : subset)
            if (e < 0 || static_cast<std::size_t>(e) >= order())
                throw group_error("subset element index out of range in group '" + name_ + "'");
        std::vector<char> in(order(), 0);
        std::vector<int> members{identity_};
        in[identity_] = 1;
        std::size_t frontier = 0;
        std::size_t count = 1;
        std::vector<int> gens;
        for (int e : subset)
            if (!in[e]) {
                in[e] = 1;
                members.push_back(e);
                ++count;
            }
        while (frontier < members.size() && count < stop_at) {
            const int e = members[frontier++];
            for (int g : subset) {
                const int x = mul(g, e);
                if (!in[x]) {
                    in[x] = 1;
                    members.push_back(x);
                    ++count;
                }
            }
        }
        return count;
    }

    std::string name_;
    int degree_;
    std::vector<Permutation> elements_;
    std::vector<int> inverse_;
    std::vector<std::int64_t> order_;
    std::vector<int> gen_idx_;
    std::vector<std::uint32_t> table_;
    int identity_ = 0;
};

} // namespace omnisig
