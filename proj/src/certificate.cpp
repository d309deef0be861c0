#include "svf/certificate.hpp"

#include <unordered_set>

#include "svf/errors.hpp"

namespace svf {

NodePtr make_generator() {
    return std::make_shared<const CertNode>(CertNode{Generator{}});
}

NodePtr make_ad(VectorField left, NodePtr child) {
    if (!child) throw Error("ad node requires a child");
    return std::make_shared<const CertNode>(CertNode{Ad{std::move(left), std::move(child)}});
}

NodePtr make_lincomb(std::vector<LinTerm> terms) {
    for (const auto& term : terms)
        if (!term.child) throw Error("lincomb term requires a child");
    return std::make_shared<const CertNode>(CertNode{LinComb{std::move(terms)}});
}

const VectorField& CertEvaluator::eval(const NodePtr& node) {
    if (!node) throw Error("null certificate node");
    auto it = memo_.find(node.get());
    if (it != memo_.end()) return it->second;
    VectorField value = std::visit(
        [&](const auto& n) -> VectorField {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Generator>) {
                return seed_;
            } else if constexpr (std::is_same_v<T, Ad>) {
                return bracket(n.left, eval(n.child));
            } else {
                VectorField acc(seed_.signature());
                for (const auto& [coeff, child] : n.terms) acc += coeff * eval(child);
                return acc;
            }
        },
        node->node);
    return memo_.emplace(node.get(), std::move(value)).first->second;
}

VectorField evaluate_certificate(const NodePtr& root, const VectorField& seed) {
    CertEvaluator ev(seed);
    return ev.eval(root);
}

namespace {

void count_nodes(const NodePtr& node, std::unordered_set<const CertNode*>& seen) {
    if (!node || !seen.insert(node.get()).second) return;
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Ad>) {
                count_nodes(n.child, seen);
            } else if constexpr (std::is_same_v<T, LinComb>) {
                for (const auto& term : n.terms) count_nodes(term.child, seen);
            }
        },
        node->node);
}

bool nodes_equal(const CertNode* a, const CertNode* b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return std::visit(
        [&](const auto& na) -> bool {
            using T = std::decay_t<decltype(na)>;
            const T* nb = std::get_if<T>(&b->node);
            if (!nb) return false;
            if constexpr (std::is_same_v<T, Generator>) {
                return true;
            } else if constexpr (std::is_same_v<T, Ad>) {
                return na.left == nb->left && nodes_equal(na.child.get(), nb->child.get());
            } else {
                if (na.terms.size() != nb->terms.size()) return false;
                for (std::size_t i = 0; i < na.terms.size(); ++i) {
                    if (na.terms[i].coeff != nb->terms[i].coeff) return false;
                    if (!nodes_equal(na.terms[i].child.get(), nb->terms[i].child.get()))
                        return false;
                }
                return true;
            }
        },
        a->node);
}

/// Returns false and fills path/message at the first structural defect.
bool check_structure(const NodePtr& node, const SigPtr& sig, const std::string& path,
                     std::string& bad_path, std::string& message) {
    if (!node) {
        bad_path = path;
        message = "missing node";
        return false;
    }
    return std::visit(
        [&](const auto& n) -> bool {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Generator>) {
                return true;
            } else if constexpr (std::is_same_v<T, Ad>) {
                if (!same_signature(n.left.signature(), sig)) {
                    bad_path = path;
                    message = "ad left argument has a different signature";
                    return false;
                }
                return check_structure(n.child, sig, path + ".child", bad_path, message);
            } else {
                for (std::size_t i = 0; i < n.terms.size(); ++i) {
                    if (!check_structure(n.terms[i].child, sig,
                                         path + ".terms[" + std::to_string(i) + "]", bad_path,
                                         message))
                        return false;
                }
                return true;
            }
        },
        node->node);
}

} // namespace

std::size_t certificate_size(const NodePtr& root) {
    std::unordered_set<const CertNode*> seen;
    count_nodes(root, seen);
    return seen.size();
}

bool certificates_equal(const NodePtr& a, const NodePtr& b) {
    return nodes_equal(a.get(), b.get());
}

VerifyResult verify_certificate(const NodePtr& root, const VectorField& seed,
                                const VectorField& claimed) {
    if (!same_signature(seed.signature(), claimed.signature()))
        return {Verdict::Malformed, "root", "seed and claimed field signatures differ"};
    std::string bad_path, message;
    if (!check_structure(root, seed.signature(), "root", bad_path, message))
        return {Verdict::Malformed, bad_path, message};
    CertEvaluator ev(seed);
    try {
        const VectorField& value = ev.eval(root);
        if (value == claimed) return {Verdict::Verified, "", ""};
        return {Verdict::Mismatch, "root", "certificate evaluates to a different field"};
    } catch (const Error& e) {
        return {Verdict::Malformed, "root", e.what()};
    }
}

} // namespace svf
