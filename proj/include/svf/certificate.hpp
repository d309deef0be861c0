#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "svf/field.hpp"

namespace svf {

// Bracket-expression tree witnessing Lie-ideal membership: every leaf is the
// generator (seed field), inner nodes are ad-actions by arbitrary fields and
// rational linear combinations — exactly the operations an ideal absorbs, so
// soundness is structural and verification reduces to exact evaluation.

struct CertNode;
using NodePtr = std::shared_ptr<const CertNode>;

struct Generator {};

struct Ad {
    VectorField left;
    NodePtr child;
};

struct LinTerm {
    Rational coeff;
    NodePtr child;
};

struct LinComb {
    std::vector<LinTerm> terms; // empty list = zero
};

struct CertNode {
    std::variant<Generator, Ad, LinComb> node;
};

NodePtr make_generator();
NodePtr make_ad(VectorField left, NodePtr child);
NodePtr make_lincomb(std::vector<LinTerm> terms);

/// Evaluates nodes against a fixed seed, memoized by node identity so shared
/// subtrees are computed once. Throws Error on null children.
class CertEvaluator {
public:
    explicit CertEvaluator(VectorField seed) : seed_(std::move(seed)) {}

    const VectorField& eval(const NodePtr& node);

private:
    VectorField seed_;
    std::unordered_map<const CertNode*, VectorField> memo_;
};

VectorField evaluate_certificate(const NodePtr& root, const VectorField& seed);

/// Unique node count (shared subtrees counted once).
std::size_t certificate_size(const NodePtr& root);

/// Structural equality of the evaluated trees (sharing-insensitive).
bool certificates_equal(const NodePtr& a, const NodePtr& b);

enum class Verdict { Verified, Mismatch, Malformed };

struct VerifyResult {
    Verdict verdict = Verdict::Malformed;
    std::string node_path; // offending node for Mismatch/Malformed
    std::string message;
    bool ok() const { return verdict == Verdict::Verified; }
};

/// Walks the tree (null children and signature mismatches are Malformed with
/// the node's path), evaluates exactly, and compares with the claim.
VerifyResult verify_certificate(const NodePtr& root, const VectorField& seed,
                                const VectorField& claimed);

} // namespace svf
