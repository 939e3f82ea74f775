#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "chern/errors.hpp"
#include "chern/partition.hpp"
#include "chern/rational.hpp"

namespace chern {

/// The Grassmannian G(k,n) of k-planes in n-space.
struct GrassmannSpec {
    int k;
    int n;

    GrassmannSpec(int k_, int n_) : k(k_), n(n_) {
        if (k < 1 || k >= n)
            throw InvalidArgument("Grassmannian needs 0 < k < n; got k = " +
                                  std::to_string(k) + ", n = " + std::to_string(n));
    }

    long long dimension() const { return static_cast<long long>(k) * (n - k); }
};

namespace detail {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    if (r > n - r) r = n - r;
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= r; ++i) result = result * (n - r + i) / i;
    return result;
}

}  // namespace detail

/// Vector bundle expression over the Grassmannian, built from the
/// tautological sub-bundle S and quotient bundle Q by duals, symmetric and
/// exterior powers, and tensor products.  Immutable; copies share structure.
class BundleExpr {
public:
    enum class Kind { Sub, Quot, Dual, Sym, Tensor, Wedge };

    static BundleExpr S() { return BundleExpr(Kind::Sub, 0, nullptr, nullptr); }
    static BundleExpr Q() { return BundleExpr(Kind::Quot, 0, nullptr, nullptr); }

    static BundleExpr dual(const BundleExpr& b) {
        return BundleExpr(Kind::Dual, 0, b.node_, nullptr);
    }

    static BundleExpr sym(std::uint32_t m, const BundleExpr& b) {
        if (m == 0) throw InvalidArgument("symmetric power index must be at least 1");
        return BundleExpr(Kind::Sym, m, b.node_, nullptr);
    }

    static BundleExpr tensor(const BundleExpr& a, const BundleExpr& b) {
        return BundleExpr(Kind::Tensor, 0, a.node_, b.node_);
    }

    static BundleExpr wedge(std::uint32_t m, const BundleExpr& b) {
        if (m == 0) throw InvalidArgument("exterior power index must be at least 1");
        return BundleExpr(Kind::Wedge, m, b.node_, nullptr);
    }

    Kind kind() const { return node_->kind; }
    std::uint32_t multiplicity() const { return node_->m; }
    BundleExpr left() const { return BundleExpr(node_->a); }
    BundleExpr right() const { return BundleExpr(node_->b); }

    std::uint64_t rank(const GrassmannSpec& spec) const {
        switch (node_->kind) {
            case Kind::Sub: return static_cast<std::uint64_t>(spec.k);
            case Kind::Quot: return static_cast<std::uint64_t>(spec.n - spec.k);
            case Kind::Dual: return left().rank(spec);
            case Kind::Sym:
                return detail::binomial(left().rank(spec) + node_->m - 1, node_->m);
            case Kind::Tensor: return left().rank(spec) * right().rank(spec);
            case Kind::Wedge: return detail::binomial(left().rank(spec), node_->m);
        }
        return 0;
    }

private:
    struct Node {
        Kind kind;
        std::uint32_t m;
        std::shared_ptr<const Node> a;
        std::shared_ptr<const Node> b;
    };

    BundleExpr(Kind kind, std::uint32_t m, std::shared_ptr<const Node> a,
               std::shared_ptr<const Node> b)
        : node_(std::make_shared<const Node>(Node{kind, m, std::move(a), std::move(b)})) {}

    explicit BundleExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// Characteristic class expression: rational constants, Chern classes,
/// Euler classes, and Schur classes of bundles, combined by sums, products
/// and integer powers.  Immutable; copies share structure.
class ClassExpr {
public:
    enum class Kind { Constant, Chern, Euler, Schur, Sum, Product, Power };

    static ClassExpr constant(const Rational& c) {
        Node n{Kind::Constant};
        n.value = c;
        return ClassExpr(std::move(n));
    }

    static ClassExpr chern(long i, const BundleExpr& b) {
        Node n{Kind::Chern};
        n.index = i;
        n.bundle = b;
        return ClassExpr(std::move(n));
    }

    static ClassExpr euler(const BundleExpr& b) {
        Node n{Kind::Euler};
        n.bundle = b;
        return ClassExpr(std::move(n));
    }

    static ClassExpr schur_class(const Partition& lambda, const BundleExpr& b) {
        Node n{Kind::Schur};
        n.partition = lambda;
        n.bundle = b;
        return ClassExpr(std::move(n));
    }

    static ClassExpr sum(const ClassExpr& a, const ClassExpr& b) {
        Node n{Kind::Sum};
        n.lhs = a.node_;
        n.rhs = b.node_;
        return ClassExpr(std::move(n));
    }

    static ClassExpr product(const ClassExpr& a, const ClassExpr& b) {
        Node n{Kind::Product};
        n.lhs = a.node_;
        n.rhs = b.node_;
        return ClassExpr(std::move(n));
    }

    static ClassExpr power(const ClassExpr& a, std::uint32_t exponent) {
        Node n{Kind::Power};
        n.lhs = a.node_;
        n.exponent = exponent;
        return ClassExpr(std::move(n));
    }

    friend ClassExpr operator+(const ClassExpr& a, const ClassExpr& b) { return sum(a, b); }
    friend ClassExpr operator*(const ClassExpr& a, const ClassExpr& b) {
        return product(a, b);
    }

    Kind kind() const { return node_->kind; }
    const Rational& value() const { return node_->value; }
    long index() const { return node_->index; }
    const Partition& partition() const { return node_->partition; }
    const BundleExpr& bundle() const { return *node_->bundle; }
    ClassExpr left() const { return ClassExpr(node_->lhs); }
    ClassExpr right() const { return ClassExpr(node_->rhs); }
    std::uint32_t exponent() const { return node_->exponent; }

private:
    struct Node {
        Kind kind;
        Rational value;
        long index = 0;
        std::uint32_t exponent = 0;
        Partition partition;
        std::optional<BundleExpr> bundle;
        std::shared_ptr<const Node> lhs;
        std::shared_ptr<const Node> rhs;
    };

    explicit ClassExpr(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}
    explicit ClassExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

}  // namespace chern
