#include "svf/certio.hpp"

#include <json.hpp>

#include "svf/parse.hpp"
#include "svf/print.hpp"

namespace svf {

namespace {

using nlohmann::json;

json node_to_json(const NodePtr& node) {
    if (!node) throw Error("null certificate node");
    return std::visit(
        [&](const auto& n) -> json {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Generator>) {
                return json{{"kind", "generator"}};
            } else if constexpr (std::is_same_v<T, Ad>) {
                return json{{"kind", "ad"},
                            {"left", print_field(n.left)},
                            {"child", node_to_json(n.child)}};
            } else {
                json terms = json::array();
                for (const auto& [coeff, child] : n.terms)
                    terms.push_back(json{{"coeff", rational_to_string(coeff)},
                                         {"child", node_to_json(child)}});
                return json{{"kind", "lincomb"}, {"terms", std::move(terms)}};
            }
        },
        node->node);
}

const json& member(const json& obj, const char* key, const std::string& path) {
    if (!obj.is_object())
        throw CertSchemaError("expected an object", path);
    auto it = obj.find(key);
    if (it == obj.end())
        throw CertSchemaError(std::string("missing key '") + key + "'", path);
    return *it;
}

std::string string_member(const json& obj, const char* key, const std::string& path) {
    const json& v = member(obj, key, path);
    if (!v.is_string())
        throw CertSchemaError(std::string("key '") + key + "' must be a string",
                              path + "." + key);
    return v.get<std::string>();
}

VectorField field_member(const json& obj, const char* key, const std::string& path,
                         const SigPtr& sig) {
    std::string text = string_member(obj, key, path);
    try {
        return parse_field(text, sig);
    } catch (const ParseError& e) {
        throw CertSchemaError(std::string("bad field text: ") + e.what(), path + "." + key);
    }
}

NodePtr json_to_node(const json& j, const std::string& path, const SigPtr& sig) {
    std::string kind = string_member(j, "kind", path);
    if (kind == "generator") return make_generator();
    if (kind == "ad") {
        VectorField left = field_member(j, "left", path, sig);
        return make_ad(std::move(left), json_to_node(member(j, "child", path),
                                                     path + ".child", sig));
    }
    if (kind == "lincomb") {
        const json& terms = member(j, "terms", path);
        if (!terms.is_array())
            throw CertSchemaError("'terms' must be an array", path + ".terms");
        std::vector<LinTerm> out;
        out.reserve(terms.size());
        for (std::size_t i = 0; i < terms.size(); ++i) {
            std::string term_path = path + ".terms[" + std::to_string(i) + "]";
            std::string coeff_text = string_member(terms[i], "coeff", term_path);
            Rational coeff;
            try {
                coeff = rational_from_string(coeff_text);
            } catch (const Error& e) {
                throw CertSchemaError(e.what(), term_path + ".coeff");
            }
            out.push_back({std::move(coeff),
                           json_to_node(member(terms[i], "child", term_path),
                                        term_path + ".child", sig)});
        }
        return make_lincomb(std::move(out));
    }
    throw CertSchemaError("unknown node kind '" + kind + "'", path + ".kind");
}

std::size_t size_member(const json& obj, const char* key, const std::string& path) {
    const json& v = member(obj, key, path);
    if (!v.is_number_unsigned())
        throw CertSchemaError(std::string("key '") + key + "' must be a nonnegative integer",
                              path + "." + key);
    return v.get<std::size_t>();
}

} // namespace

std::string emit_certificate(const CertificateDoc& doc) {
    json j;
    j["signature"] = {{"r", doc.sig->even_count},
                      {"s", doc.sig->odd_count},
                      {"even_names", doc.sig->even_names},
                      {"odd_names", doc.sig->odd_names}};
    j["seed"] = print_field(doc.seed);
    j["target"] = print_field(doc.target);
    j["root"] = node_to_json(doc.root);
    return j.dump(2);
}

CertificateDoc parse_certificate(const std::string& text, const SigPtr& expected) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw CertSchemaError(std::string("invalid document: ") + e.what(), "");
    }
    const json& sig_json = member(j, "signature", "document");
    std::size_t r = size_member(sig_json, "r", "signature");
    std::size_t s = size_member(sig_json, "s", "signature");
    const json& even_names = member(sig_json, "even_names", "signature");
    const json& odd_names = member(sig_json, "odd_names", "signature");
    if (!even_names.is_array() || !odd_names.is_array())
        throw CertSchemaError("variable name lists must be arrays", "signature");
    std::vector<std::string> evens, odds;
    for (const auto& n : even_names) {
        if (!n.is_string())
            throw CertSchemaError("even_names entries must be strings", "signature.even_names");
        evens.push_back(n.get<std::string>());
    }
    for (const auto& n : odd_names) {
        if (!n.is_string())
            throw CertSchemaError("odd_names entries must be strings", "signature.odd_names");
        odds.push_back(n.get<std::string>());
    }
    SigPtr sig;
    try {
        sig = make_signature(r, s, std::move(evens), std::move(odds));
    } catch (const Error& e) {
        throw CertSchemaError(e.what(), "signature");
    }
    if (expected && !same_signature(sig, expected))
        throw CertSchemaError("document signature does not match the expected signature",
                              "signature");
    VectorField seed = field_member(j, "seed", "document", sig);
    VectorField target = field_member(j, "target", "document", sig);
    NodePtr root = json_to_node(member(j, "root", "document"), "root", sig);
    return {std::move(sig), std::move(seed), std::move(target), std::move(root)};
}

} // namespace svf
