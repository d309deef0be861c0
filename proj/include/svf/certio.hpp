#pragma once

#include <string>

#include "svf/certificate.hpp"

namespace svf {

/// Self-contained interchange unit: the signature travels with the tree, so
/// a verifier needs nothing beyond the document text.
struct CertificateDoc {
    SigPtr sig;
    VectorField seed;
    VectorField target;
    NodePtr root;
};

/// Schema violation with the path of the offending node
/// (e.g. "root.terms[1].child.kind").
class CertSchemaError : public Error {
public:
    CertSchemaError(const std::string& message, std::string path)
        : Error(path.empty() ? message : message + " (at " + path + ")"),
          path_(std::move(path)) {}

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

/// JSON text: {signature: {r, s, even_names, odd_names}, seed: field-text,
/// target: field-text, root: node} with node kinds "generator",
/// "ad" {left, child}, "lincomb" {terms: [{coeff, child}]}. Rationals are
/// strings; no floating point anywhere.
std::string emit_certificate(const CertificateDoc& doc);

/// Inverse of emit_certificate. When expected is non-null the embedded
/// signature must match it. Throws CertSchemaError with a node path.
CertificateDoc parse_certificate(const std::string& text, const SigPtr& expected = nullptr);

} // namespace svf
