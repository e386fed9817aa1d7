// opd: truncated Groebner bases, dimension tables and identity checks for
// shuffle operads presented by binary operations and multilinear identities.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "opd/builtins.hpp"
#include "opd/engine.hpp"
#include "opd/json_io.hpp"
#include "opd/poisder.hpp"

using namespace opd;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUserError = 2;
constexpr int kExitResourceCap = 3;
constexpr int kMaxArityCap = 7;

struct UserError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw UserError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// builtin and identity names accept '-' as a spelling of '_'
std::string normalized(std::string name) {
    for (char& c : name)
        if (c == '-') c = '_';
    return name;
}

struct CommonOpts {
    std::string operad;
    std::string presentation_file;
    std::string identity;
    std::string identity_file;
    int max_arity = 5;
    std::vector<std::string> precedence;
    int workers = 1;
    std::string format = "human";
    std::string out;
    bool no_cache = false;
};

void add_presentation_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--operad", o.operad, "built-in presentation name");
    cmd->add_option("--presentation-file", o.presentation_file, "presentation file to load");
    cmd->add_option("--max-arity", o.max_arity, "certification bound (default 5, at most 7)");
    cmd->add_option("--precedence", o.precedence,
                    "generator precedence, smallest first (comma separated)")
        ->delimiter(',');
    cmd->add_option("--workers", o.workers, "worker threads for completion");
    cmd->add_flag("--no-cache", o.no_cache, "skip the on-disk basis cache");
}

void add_output_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--format", o.format, "human or json")
        ->check(CLI::IsMember({"human", "json"}));
    cmd->add_option("--out", o.out, "write the report to a file instead of stdout");
}

void add_identity_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--identity", o.identity, "identity name (presentation or library)");
    cmd->add_option("--identity-file", o.identity_file, "file with identities to check");
}

std::string presentation_source(const CommonOpts& o) {
    if (!o.presentation_file.empty() && !o.operad.empty())
        throw UserError("give either --operad or --presentation-file, not both");
    if (!o.presentation_file.empty()) return read_file(o.presentation_file);
    if (o.operad.empty()) throw UserError("an --operad or --presentation-file is required");
    std::string name = o.operad;
    const std::string* src = builtin_source(name);
    if (!src) src = builtin_source(normalized(name));
    if (!src) {
        std::string known;
        for (const auto& n : builtin_names()) known += (known.empty() ? "" : ", ") + n;
        throw UserError("unknown operad '" + o.operad + "' (built-ins: " + known + ")");
    }
    return *src;
}

void check_limits(const CommonOpts& o) {
    if (o.max_arity < 2) throw UserError("--max-arity must be at least 2");
    if (o.max_arity > kMaxArityCap)
        throw std::range_error("--max-arity above " + std::to_string(kMaxArityCap) +
                               " exceeds the resource cap");
    if (o.workers < 1) throw UserError("--workers must be positive");
}

uint64_t fnv1a(const std::string& s, uint64_t h = 1469598103934665603ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::filesystem::path cache_dir() {
    if (const char* dir = std::getenv("OPD_CACHE_DIR")) return dir;
    if (const char* home = std::getenv("HOME"))
        return std::filesystem::path(home) / ".cache" / "opd";
    return std::filesystem::temp_directory_path() / "opd-cache";
}

std::filesystem::path cache_path(const std::string& source, const CommonOpts& o) {
    std::string key = source + '\0' + std::to_string(o.max_arity);
    for (const auto& p : o.precedence) key += '\0' + p;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(key)));
    return cache_dir() / (std::string(buf) + ".json");
}

CompletedOperad load_operad(const CommonOpts& o) {
    std::string source = presentation_source(o);
    Presentation pres = parse_presentation(source);
    std::filesystem::path path = cache_path(source, o);

    if (!o.no_cache && std::filesystem::exists(path)) {
        try {
            json j = json::parse(read_file(path.string()));
            ShuffleSignature sig = compile_alphabet(pres.ops);
            MonomialOrder ord = order_for(pres, sig, o.precedence);
            GroebnerBasis basis = basis_from_json(j.at("basis"), sig.alpha, ord);
            MonomialCache cache(sig.alpha);
            return {std::move(pres), std::move(sig), std::move(ord), std::move(cache),
                    std::move(basis)};
        } catch (const std::exception&) {
            // fall through and recompute on any cache corruption
        }
    }

    CompletedOperad op = make_operad(std::move(pres), o.max_arity, o.precedence, o.workers);
    if (!o.no_cache) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        if (!ec) {
            std::ofstream out(path);
            out << json{{"basis", basis_json(op.basis, op.sig.alpha)}}.dump(2) << "\n";
        }
    }
    return op;
}

void emit(const CommonOpts& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.out);
    if (!out.good()) throw UserError("cannot write file: " + o.out);
    out << text;
}

// identities to check: --identity-file wins; otherwise --identity is looked
// up in the presentation, then in the shipped identity library.
std::vector<IdentityExpr> collect_identities(const CommonOpts& o, const Presentation& target) {
    std::vector<IdentityExpr> out;
    if (!o.identity_file.empty()) {
        Presentation file = parse_presentation(read_file(o.identity_file));
        for (const auto& id : file.identities) {
            if (!o.identity.empty() && normalized(id.name) != normalized(o.identity)) continue;
            out.push_back(remap_ops(id, file, target));
        }
        if (out.empty()) throw UserError("no matching identity in " + o.identity_file);
        return out;
    }
    if (o.identity.empty()) throw UserError("an --identity or --identity-file is required");
    std::string name = normalized(o.identity);
    if (const IdentityExpr* id = target.find_identity(name)) {
        out.push_back(*id);
        return out;
    }
    Presentation lib = builtin("identities");
    if (const IdentityExpr* id = lib.find_identity(name)) {
        out.push_back(remap_ops(*id, lib, target));
        return out;
    }
    throw UserError("unknown identity '" + o.identity + "'");
}

int run_complete(const CommonOpts& o) {
    CompletedOperad op = load_operad(o);
    if (o.format == "json") {
        emit(o, basis_json(op.basis, op.sig.alpha).dump(2) + "\n");
        return kExitHolds;
    }
    std::ostringstream ss;
    ss << "rules: " << op.basis.rules.size() << " (certified through arity "
       << op.basis.certified_arity << ")\n";
    for (const auto& r : op.basis.rules)
        ss << "  " << render(r.lead, op.sig.alpha) << " -> "
       << (r.tail.is_zero() ? "0" : render(r.tail, op.sig.alpha)) << "\n";
    emit(o, ss.str());
    return kExitHolds;
}

int run_dims(const CommonOpts& o) {
    CompletedOperad op = load_operad(o);
    if (o.format == "json") {
        json table = json::array();
        for (int n = 1; n <= o.max_arity; ++n)
            table.push_back({{"arity", n}, {"dim", dims(op.basis, op.cache, n)}});
        emit(o, json{{"dims", table}}.dump(2) + "\n");
        return kExitHolds;
    }
    std::ostringstream ss;
    for (int n = 1; n <= o.max_arity; ++n)
        ss << n << ": " << dims(op.basis, op.cache, n) << "\n";
    emit(o, ss.str());
    return kExitHolds;
}

int run_verify(const CommonOpts& o) {
    CompletedOperad op = load_operad(o);
    std::vector<IdentityExpr> ids = collect_identities(o, op.pres);
    for (const auto& id : ids)
        if (id.arity > o.max_arity)
            throw UserError("identity '" + id.name + "' has arity " + std::to_string(id.arity) +
                            "; raise --max-arity");
    bool all_hold = true;
    json checks = json::array();
    std::ostringstream human;
    for (const auto& id : ids) {
        IdentityCheck check = verify_identity(op, id);
        all_hold = all_hold && check.holds;
        checks.push_back(check_json(check, op.sig.alpha));
        human << check.name << ": " << (check.holds ? "holds" : "fails") << " ("
              << check.instances.size() << " instance"
              << (check.instances.size() == 1 ? "" : "s") << ")\n";
        if (!check.holds)
            for (size_t i = 0; i < check.residues.size(); ++i)
                if (!check.residues[i].is_zero())
                    human << "  residue: " << render(check.residues[i], op.sig.alpha) << "\n";
    }
    if (o.format == "json")
        emit(o, json{{"holds", all_hold}, {"checks", checks}}.dump(2) + "\n");
    else
        emit(o, human.str());
    return all_hold ? kExitHolds : kExitFails;
}

int run_tau_check(const CommonOpts& o) {
    Presentation lib = builtin("identities");
    std::vector<IdentityExpr> ids;
    if (!o.identity_file.empty() || !o.identity.empty()) {
        CommonOpts opts = o;
        ids = collect_identities(opts, lib);
    } else {
        throw UserError("an --identity or --identity-file is required");
    }
    bool all_vanish = true;
    json reports = json::array();
    std::ostringstream human;
    for (const auto& id : ids) {
        TauReport r = tau_check(id, lib);
        all_vanish = all_vanish && r.vanishes;
        reports.push_back(
            {{"identity", r.identity}, {"vanishes", r.vanishes}, {"support", r.support}});
        human << r.identity << ": "
              << (r.vanishes ? "vanishes" : "nonzero (" + std::to_string(r.support) + " coordinates)")
              << "\n";
    }
    if (o.format == "json")
        emit(o, json{{"vanishes", all_vanish}, {"reports", reports}}.dump(2) + "\n");
    else
        emit(o, human.str());
    return all_vanish ? kExitHolds : kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"shuffle operad calculator"};
    app.require_subcommand(1);

    CommonOpts o;
    CLI::App* complete = app.add_subcommand("complete", "compute a truncated rewriting system");
    add_presentation_opts(complete, o);
    add_output_opts(complete, o);

    CLI::App* dims_cmd = app.add_subcommand("dims", "dimensions of the quotient per arity");
    add_presentation_opts(dims_cmd, o);
    add_output_opts(dims_cmd, o);

    CLI::App* verify = app.add_subcommand("verify", "check identities modulo a presentation");
    add_presentation_opts(verify, o);
    add_identity_opts(verify, o);
    add_output_opts(verify, o);

    CLI::App* tau = app.add_subcommand("tau-check",
                                       "evaluate identities in the free differential Poisson algebra");
    add_identity_opts(tau, o);
    add_output_opts(tau, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUserError;
    }

    try {
        if (!tau->parsed()) check_limits(o);
        if (complete->parsed()) return run_complete(o);
        if (dims_cmd->parsed()) return run_dims(o);
        if (verify->parsed()) return run_verify(o);
        return run_tau_check(o);
    } catch (const std::range_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUserError;
    }
}
