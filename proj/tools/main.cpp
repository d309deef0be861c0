#include <CLI11.hpp>

#include <svf/certificate.hpp>
#include <svf/certify.hpp>
#include <svf/certio.hpp>
#include <svf/errors.hpp>
#include <svf/field.hpp>
#include <svf/oracle.hpp>
#include <svf/parse.hpp>
#include <svf/print.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace svf;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

/// "r,s" -> signature. Single even variable is named t, odd variables are
/// always numbered (theta1 even when s = 1) so inputs and reports use one
/// spelling.
SigPtr signature_from(const std::string& text) {
    std::size_t r = 0, s = 0;
    char comma = 0;
    std::istringstream in(text);
    if (!(in >> r >> comma >> s) || comma != ',' || !in.eof())
        throw PreconditionError("--sig wants the form r,s (for example 2,1)");
    if (r + s == 0) throw PreconditionError("the signature needs at least one variable");
    std::vector<std::string> evens, odds;
    for (std::size_t i = 1; i <= r; ++i) evens.push_back(r == 1 ? "t" : "t" + std::to_string(i));
    for (std::size_t j = 1; j <= s; ++j) odds.push_back("theta" + std::to_string(j));
    return make_signature(r, s, std::move(evens), std::move(odds));
}

int run_eval(const std::string& sig_text, const std::string& field_text,
             const std::string& arg_text) {
    SigPtr sig = signature_from(sig_text);
    VectorField x = parse_field(field_text, sig);
    SuperPolynomial f = parse_poly(arg_text, sig);
    std::cout << print_poly(apply(x, f)) << "\n";
    return kOk;
}

int run_bracket(const std::string& sig_text, const std::string& x_text,
                const std::string& y_text) {
    SigPtr sig = signature_from(sig_text);
    std::cout << print_field(bracket(parse_field(x_text, sig), parse_field(y_text, sig))) << "\n";
    return kOk;
}

int run_certify(const std::string& sig_text, const std::string& eta_text,
                const std::string& nu_text, const std::string& out_path) {
    SigPtr sig = signature_from(sig_text);
    if (sig->even_count == 0) {
        std::cerr << "error: purely odd signatures have no certificate pipeline; "
                     "use the scan-wn oracle instead\n";
        return kUsage;
    }
    VectorField eta = parse_field(eta_text, sig);
    VectorField nu = parse_field(nu_text, sig);

    CertifiedField cert = simplicity_certificate(eta, nu);
    CertificateDoc doc{sig, cert.seed, cert.target, cert.cert};
    {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kUsage;
        }
        out << emit_certificate(doc) << "\n";
    }

    // Independent pass over the bytes on disk, never the in-memory tree.
    std::ifstream in(out_path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    CertificateDoc reread = parse_certificate(buffer.str());
    VerifyResult result = verify_certificate(reread.root, reread.seed, reread.target);
    if (!result.ok()) {
        std::cerr << "error: serialized certificate failed verification at " << result.node_path
                  << ": " << result.message << "\n";
        return kMismatch;
    }

    std::cout << "seed:   " << print_field(cert.seed) << "\n";
    std::cout << "target: " << print_field(cert.target) << "\n";
    std::cout << "trace:\n";
    for (const auto& line : cert.trace) std::cout << "  " << line << "\n";
    std::cout << "certificate: " << out_path << " (" << certificate_size(cert.cert)
              << " nodes)\n";
    std::cout << "VERIFIED\n";
    return kOk;
}

int run_verify(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        return kUsage;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    CertificateDoc doc = parse_certificate(buffer.str());
    VerifyResult result = verify_certificate(doc.root, doc.seed, doc.target);
    switch (result.verdict) {
    case Verdict::Verified:
        std::cout << "VERIFIED\n";
        return kOk;
    case Verdict::Mismatch:
        std::cout << "MISMATCH at " << result.node_path << ": " << result.message << "\n";
        return kMismatch;
    case Verdict::Malformed:
        std::cout << "MALFORMED at " << result.node_path << ": " << result.message << "\n";
        return kUsage;
    }
    return kUsage;
}

int run_scan(std::size_t s, std::size_t trials, std::uint64_t seed,
             const std::string& out_path) {
    ScanReport report = simplicity_scan(s, trials, seed);
    std::cout << report.text;
    if (!out_path.empty() && report.proper_found) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kUsage;
        }
        out << ideal_document(report) << "\n";
        std::cout << "ideal basis written to " << out_path << "\n";
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact vector-field algebra on supercommutative polynomial rings"};
    app.require_subcommand(1);

    std::string sig_text, field_text, arg_text, x_text, y_text;
    std::string eta_text, nu_text, doc_path;
    std::string out_path = "certificate.json";
    std::string scan_out;
    std::size_t scan_s = 1, scan_trials = 20;
    std::uint64_t scan_seed = 7;

    CLI::App* eval = app.add_subcommand("eval", "apply a field to a polynomial");
    eval->add_option("--sig", sig_text, "signature r,s")->required();
    eval->add_option("--field", field_text, "vector field text")->required();
    eval->add_option("--arg", arg_text, "polynomial text")->required();

    CLI::App* brk = app.add_subcommand("bracket", "Lie bracket of two fields");
    brk->add_option("--sig", sig_text, "signature r,s")->required();
    brk->add_option("x", x_text, "first field")->required();
    brk->add_option("y", y_text, "second field")->required();

    CLI::App* certify = app.add_subcommand("certify", "build and verify a simplicity certificate");
    certify->add_option("--sig", sig_text, "signature r,s")->required();
    certify->add_option("--eta", eta_text, "nonzero seed field")->required();
    certify->add_option("--nu", nu_text, "target field")->required();
    certify->add_option("--out", out_path, "output document path (default certificate.json)");

    CLI::App* verify = app.add_subcommand("verify", "re-verify a certificate document");
    verify->add_option("document", doc_path, "certificate document path")->required();

    CLI::App* scan = app.add_subcommand("scan-wn", "ideal-closure scan of the purely odd algebra");
    scan->add_option("--s", scan_s, "number of odd variables")->required();
    scan->add_option("--trials", scan_trials, "random homogeneous generators to test");
    scan->add_option("--seed", scan_seed, "randomness seed (printed in the report)");
    scan->add_option("--out", scan_out, "write the proper ideal basis as JSON when found");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (app.got_subcommand(eval)) return run_eval(sig_text, field_text, arg_text);
        if (app.got_subcommand(brk)) return run_bracket(sig_text, x_text, y_text);
        if (app.got_subcommand(certify)) return run_certify(sig_text, eta_text, nu_text, out_path);
        if (app.got_subcommand(verify)) return run_verify(doc_path);
        if (app.got_subcommand(scan)) return run_scan(scan_s, scan_trials, scan_seed, scan_out);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << " (bytes " << e.span().begin << ".."
                  << e.span().end << ")\n";
        return kUsage;
    } catch (const CertSchemaError& e) {
        std::cerr << "document error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
