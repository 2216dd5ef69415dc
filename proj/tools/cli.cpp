#include "cli.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "tfkernel/errors.hpp"
#include "tfkernel/gabor.hpp"
#include "tfkernel/kernel_theorems.hpp"
#include "tfkernel/mod_spaces.hpp"
#include "tfkernel/oracle.hpp"

namespace tfk::cli {

using nlohmann::json;

namespace {

std::string trim(std::string s) {
    const auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(trim(item));
    if (!s.empty() && s.back() == sep) parts.emplace_back();
    return parts;
}

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    errno = 0;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return errno == 0 && end == s.c_str() + s.size() && std::isfinite(out);
}

std::size_t parse_count(const std::string& s, const std::string& field) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw UsageError(field + ": expected a positive integer, got '" + s + "'");
    const unsigned long long v = std::stoull(s);
    if (v == 0) throw UsageError(field + ": must be positive");
    return static_cast<std::size_t>(v);
}

std::string fmt(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return "inf";
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

std::string fmt_exact(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// JSON has no infinities; +inf is spelled "inf" as for exponents, NaN becomes null.
json num(double v) {
    if (std::isnan(v)) return nullptr;
    if (std::isinf(v)) return "inf";
    return v;
}

void table(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
    std::size_t w = 0;
    for (const auto& [k, v] : rows) w = std::max(w, k.size());
    for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(w) + 2) << k << v << '\n';
}

void write_json(const std::string& path, const json& j) {
    std::ofstream os(path);
    if (!os) throw UsageError("output: cannot open '" + path + "' for writing");
    os << j.dump(2) << '\n';
}

void validate(const RunConfig& c) {
    if (c.n == 0) throw UsageError("N: must be positive");
    if (c.a == 0 || c.b == 0 || c.n % c.a != 0 || c.n % c.b != 0)
        throw UsageError("lattice: steps (" + std::to_string(c.a) + "," + std::to_string(c.b) + ") must divide N=" +
                         std::to_string(c.n));
    for (const auto& e : c.exponents) {
        try {
            (void)Exponent::parse(e);
        } catch (const std::invalid_argument&) {
            throw UsageError("exponents: '" + e + "' is not an exponent in [1, inf]");
        }
    }
}

Signal load_window(const RunConfig& c) {
    if (c.window == "gaussian") return gaussian_window(c.n);
    return read_signal(c.window, c.n);
}

json report_header(const std::string& command, const RunConfig& c) {
    return json{{"tool", kToolName}, {"version", kVersion}, {"command", command}, {"seed", c.seed}, {"config", c.to_json()}};
}

void print_header(std::ostream& out, const std::string& command, const RunConfig& c) {
    out << kToolName << ' ' << kVersion << "  " << command << "  seed=" << c.seed << '\n';
    out << "config " << c.to_json().dump() << "\n\n";
}

json frame_json(const GaborFrame& frame) {
    return json{{"lower", frame.bounds().lower}, {"upper", frame.bounds().upper}, {"condition", frame.bounds().condition()}};
}

json certificate_json(const Certificate& cert) {
    json ingredients = json::object();
    for (const auto& i : cert.ingredients) ingredients[i.name] = num(i.value);
    json verdicts = json::array();
    for (const auto& v : cert.verdicts) verdicts.push_back({{"space", v.space}, {"bounded", v.bounded}, {"bound", num(v.bound)}});
    return json{{"source", cert.source}, {"target", cert.target}, {"bound", num(cert.bound)}, {"method", cert.method},
                {"ingredients", ingredients}, {"verdicts", verdicts}};
}

void print_certificate(std::ostream& out, const Certificate& cert) {
    out << cert.source << " -> " << cert.target << "  bound " << fmt(cert.bound) << '\n';
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& i : cert.ingredients) rows.emplace_back("  " + i.name, fmt(i.value));
    for (const auto& v : cert.verdicts)
        rows.emplace_back("  bounded on " + v.space, std::string(v.bounded ? "yes" : "no") + "  (bound " + fmt(v.bound) + ")");
    table(out, rows);
    out << '\n';
}

// ---------------------------------------------------------------- commands

int cmd_modnorm(const RunConfig& c, const std::string& input, std::ostream& out) {
    if (input.empty()) throw UsageError("input: modnorm needs --input <csv>");
    const std::vector<cplx> values = read_csv(input);
    const bool is_signal = values.size() == c.n;
    if (!is_signal && values.size() != c.n * c.n)
        throw UsageError("input: " + std::to_string(values.size()) + " entries, expected N=" + std::to_string(c.n) +
                         " (signal) or N^2=" + std::to_string(c.n * c.n) + " (kernel)");
    const std::size_t arity = is_signal ? 2 : 4;
    const AxisPermutation perm = resolve_permutation(c.permutation, arity);
    const ExponentVector exps = resolve_exponents(c.exponents, arity);
    const GaborFrame frame(load_window(c), Lattice(c.n, c.a, c.b));

    double full = 0.0, sampled = 0.0;
    if (is_signal) {
        const Signal f(values);
        full = mod_norm_signal(f, frame.window(), perm, exps);
        sampled = sampled_mod_norm(f, frame, perm, exps);
    } else {
        const KernelMatrix k(ComplexTensor({c.n, c.n}, values));
        full = mod_norm_kernel(k, frame.window(), frame.dual(), perm, exps);
        sampled = sampled_mod_norm(k, frame, perm, exps);
    }

    print_header(out, "modnorm", c);
    table(out, {{"input", std::string(is_signal ? "signal" : "kernel") + " (" + input + ")"},
                {"permutation", perm.to_string()},
                {"exponents", exps.to_string()},
                {"full-grid norm", fmt(full)},
                {"lattice-sampled norm", fmt(sampled)},
                {"frame bounds A, B", fmt(frame.bounds().lower) + ", " + fmt(frame.bounds().upper)}});

    if (!c.output.empty()) {
        json j = report_header("modnorm", c);
        j["result"] = {{"input", input},       {"kind", is_signal ? "signal" : "kernel"},
                       {"permutation", perm.one_based()},
                       {"exponents", exps.to_string()},
                       {"norm", full},          {"sampled_norm", sampled},
                       {"frame", frame_json(frame)}};
        write_json(c.output, j);
    }
    return kOk;
}

int cmd_certify(const RunConfig& c, const std::string& input, std::ostream& out) {
    if (input.empty()) throw UsageError("input: certify needs --input <kernel csv>");
    const KernelMatrix k = read_kernel(input, c.n);
    const GaborFrame frame(load_window(c), Lattice(c.n, c.a, c.b));

    const Certificate mp = certify_all_mp(k, frame);
    const Certificate mpq = certify_all_mpq(k, frame);

    oracle::SearchConfig search;
    search.seed = c.seed;
    const GaborMatrix gm = gabor_matrix(k, frame);
    const ComplexTensor flat = gm.flattened();
    const ExponentVector linf1{kInf, Exponent(1.0)}, l1inf{Exponent(1.0), kInf};
    const double lower_inf1 = oracle::mixed_opnorm_lower(gm.values(), linf1, linf1, search);
    const double lower_1inf = oracle::mixed_opnorm_lower(gm.values(), l1inf, l1inf, search);
    const double lower_l1 = oracle::enumerate_l1_domain_norm(flat, Exponent(1.0));
    const double lower_linf = oracle::enumerate_l1_domain_norm(oracle::adjoint(flat), Exponent(1.0));
    const double lower_l2 = oracle::opnorm_l2(flat, search);

    print_header(out, "certify", c);
    table(out, {{"kernel", input}, {"frame bounds A, B", fmt(frame.bounds().lower) + ", " + fmt(frame.bounds().upper)}});
    out << '\n';
    print_certificate(out, mp);
    print_certificate(out, mpq);
    out << "measured lower bounds for C_g A D_gamma\n";
    table(out, {{"  l^1 -> l^1 (exact)", fmt(lower_l1)},
                {"  l^inf -> l^inf (exact)", fmt(lower_linf)},
                {"  l^2 -> l^2", fmt(lower_l2)},
                {"  l^{inf,1} -> l^{inf,1} (ascent)", fmt(lower_inf1)},
                {"  l^{1,inf} -> l^{1,inf} (ascent)", fmt(lower_1inf)}});

    if (!c.output.empty()) {
        json j = report_header("certify", c);
        j["result"] = {{"input", input},
                       {"frame", frame_json(frame)},
                       {"all_mp", certificate_json(mp)},
                       {"all_mpq", certificate_json(mpq)},
                       {"lower_bounds",
                        {{"l1_l1", lower_l1}, {"linf_linf", lower_linf}, {"l2_l2", lower_l2}, {"linf1_linf1", lower_inf1},
                         {"l1inf_l1inf", lower_1inf}, {"search", {{"trials", search.trials}, {"ascent_steps", search.ascent_steps}}}}}};
        write_json(c.output, j);
    }
    return kOk;
}

int cmd_gap(const RunConfig& c, const std::vector<std::size_t>& ns, std::ostream& out) {
    oracle::SearchConfig search;
    search.seed = c.seed;
    std::vector<GapReport> rows;
    for (std::size_t n : ns) {
        if (n < 2) throw UsageError("N: the gap experiment needs N >= 2, got " + std::to_string(n));
        rows.push_back(fourier_gap_experiment(n, search));
    }

    print_header(out, "gap", c);
    out << std::left << std::setw(6) << "N" << std::setw(16) << "schur" << std::setw(16) << "certified" << std::setw(16)
        << "lower" << "schur/certified\n";
    for (const auto& r : rows)
        out << std::left << std::setw(6) << r.n << std::setw(16) << fmt(r.schur) << std::setw(16) << fmt(r.certified)
            << std::setw(16) << fmt(r.lower) << fmt(r.schur / r.certified) << '\n';

    if (!c.output.empty()) {
        std::ofstream os(c.output);
        if (!os) throw UsageError("output: cannot open '" + c.output + "' for writing");
        os << "# " << kToolName << ' ' << kVersion << " gap seed=" << c.seed << " trials=" << search.trials
           << " config=" << c.to_json().dump() << '\n';
        os << "N,schur,certified,lower,ratio\n";
        for (const auto& r : rows)
            os << r.n << ',' << fmt_exact(r.schur) << ',' << fmt_exact(r.certified) << ',' << fmt_exact(r.lower) << ','
               << fmt_exact(r.schur / r.certified) << '\n';
    }
    return kOk;
}

int cmd_gabor(const RunConfig& c, std::ostream& out) {
    const GaborFrame frame(load_window(c), Lattice(c.n, c.a, c.b));
    print_header(out, "gabor", c);
    table(out, {{"A", fmt(frame.bounds().lower)},
                {"B", fmt(frame.bounds().upper)},
                {"B/A", fmt(frame.bounds().condition())},
                {"lattice points", std::to_string(frame.lattice().size())}});
    if (!c.output.empty()) {
        const std::string comment = std::string(kToolName) + ' ' + kVersion + " canonical dual window seed=" +
                                    std::to_string(c.seed) + " config=" + c.to_json().dump();
        write_csv(c.output, frame.dual().values(), comment);
        out << "dual window written to " << c.output << '\n';
    }
    return kOk;
}

} // namespace

// ---------------------------------------------------------------- config

json RunConfig::to_json() const {
    json exps = json::array();
    for (const auto& e : exponents) exps.push_back(e);
    return json{{"N", n},           {"lattice", {a, b}},  {"window", window}, {"permutation", permutation},
                {"exponents", exps}, {"seed", seed},       {"output", output}};
}

RunConfig config_from_json(const json& j) {
    if (!j.is_object()) throw UsageError("config: expected a JSON object");
    RunConfig c;
    for (const auto& [key, v] : j.items()) {
        if (key == "N") {
            if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0) throw UsageError("config field 'N': expected a positive integer");
            c.n = v.get<std::size_t>();
        } else if (key == "lattice") {
            if (!v.is_array() || v.size() != 2 || !v[0].is_number_unsigned() || !v[1].is_number_unsigned())
                throw UsageError("config field 'lattice': expected [a, b]");
            c.a = v[0].get<std::size_t>();
            c.b = v[1].get<std::size_t>();
        } else if (key == "window") {
            if (!v.is_string()) throw UsageError("config field 'window': expected \"gaussian\" or a file path");
            c.window = v.get<std::string>();
        } else if (key == "permutation") {
            if (v.is_string()) {
                c.permutation = v.get<std::string>();
            } else if (v.is_array()) {
                std::string s;
                for (const auto& x : v) {
                    if (!x.is_number_unsigned()) throw UsageError("config field 'permutation': entries must be positive integers");
                    s += (s.empty() ? "" : ",") + std::to_string(x.get<std::size_t>());
                }
                c.permutation = s;
            } else {
                throw UsageError("config field 'permutation': expected a name or an index list");
            }
        } else if (key == "exponents") {
            if (!v.is_array()) throw UsageError("config field 'exponents': expected a list");
            c.exponents.clear();
            for (const auto& x : v) {
                if (x.is_string()) c.exponents.push_back(x.get<std::string>());
                else if (x.is_number()) c.exponents.push_back(fmt_exact(x.get<double>()));
                else throw UsageError("config field 'exponents': entries must be numbers or \"inf\"");
            }
        } else if (key == "seed") {
            if (!v.is_number_unsigned()) throw UsageError("config field 'seed': expected a non-negative integer");
            c.seed = v.get<std::uint64_t>();
        } else if (key == "output") {
            if (!v.is_string()) throw UsageError("config field 'output': expected a path");
            c.output = v.get<std::string>();
        } else {
            throw UsageError("config: unknown field '" + key + "'");
        }
    }
    return c;
}

// ---------------------------------------------------------------- files

std::vector<cplx> read_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw UsageError("input: cannot open '" + path + "'");
    std::vector<cplx> values;
    std::string line;
    std::size_t lineno = 0;
    bool header = false;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (!header) {
            if (t.empty() || t[0] == '#') continue;
            if (t != "re,im") throw UsageError(path + ": line " + std::to_string(lineno) + ": expected header 're,im'");
            header = true;
            continue;
        }
        if (t.empty()) continue;
        const std::vector<std::string> cells = split(t, ',');
        double re = 0.0, im = 0.0;
        if (cells.size() != 2 || !parse_double(cells[0], re) || !parse_double(cells[1], im))
            throw UsageError(path + ": row " + std::to_string(lineno) + ": expected two finite numbers 're,im', got '" + t + "'");
        values.emplace_back(re, im);
    }
    if (!header) throw UsageError(path + ": missing header 're,im'");
    if (values.empty()) throw UsageError(path + ": no data rows");
    return values;
}

void write_csv(const std::string& path, std::span<const cplx> values, const std::string& comment) {
    std::ofstream os(path);
    if (!os) throw UsageError("output: cannot open '" + path + "' for writing");
    if (!comment.empty()) os << "# " << comment << '\n';
    os << "re,im\n";
    for (const auto& z : values) os << fmt_exact(z.real()) << ',' << fmt_exact(z.imag()) << '\n';
}

Signal read_signal(const std::string& path, std::size_t n) {
    std::vector<cplx> v = read_csv(path);
    if (v.size() != n)
        throw UsageError(path + ": " + std::to_string(v.size()) + " entries, expected a signal of length N=" + std::to_string(n));
    return Signal(std::move(v));
}

KernelMatrix read_kernel(const std::string& path, std::size_t n) {
    std::vector<cplx> v = read_csv(path);
    if (v.size() != n * n)
        throw UsageError(path + ": " + std::to_string(v.size()) + " entries, expected an N x N kernel (" +
                         std::to_string(n * n) + ")");
    return KernelMatrix(ComplexTensor({n, n}, std::move(v)));
}

AxisPermutation resolve_permutation(const std::string& spec, std::size_t arity) {
    if (spec == "id" || spec == "identity") return AxisPermutation::identity(arity);
    if (spec.size() == 2 && spec[0] == 'c') {
        const CatalogEntry* entry = nullptr;
        try {
            entry = &catalog::by_name(spec);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("perm: ") + e.what());
        }
        if (entry->permutation.size() != arity)
            throw UsageError("perm: " + spec + " has length " + std::to_string(entry->permutation.size()) +
                             " but the input needs " + std::to_string(arity));
        return entry->permutation;
    }
    std::vector<std::size_t> m;
    for (const auto& part : split(spec, ',')) m.push_back(parse_count(part, "perm"));
    if (m.size() != arity)
        throw UsageError("perm: '" + spec + "' has length " + std::to_string(m.size()) + " but the input needs " +
                         std::to_string(arity));
    try {
        return AxisPermutation(m);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("perm: ") + e.what());
    }
}

ExponentVector resolve_exponents(const std::vector<std::string>& spec, std::size_t arity) {
    if (spec.empty()) return ExponentVector::uniform(arity, Exponent(2.0));
    if (spec.size() != arity)
        throw UsageError("exps: " + std::to_string(spec.size()) + " exponents given but the input needs " + std::to_string(arity));
    std::vector<Exponent> e;
    for (const auto& s : spec) {
        try {
            e.push_back(Exponent::parse(s));
        } catch (const std::invalid_argument&) {
            throw UsageError("exps: '" + s + "' is not an exponent in [1, inf]");
        }
    }
    return ExponentVector(std::move(e));
}

// ---------------------------------------------------------------- entry

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mixed modulation norms, Gabor frames and kernel-operator certificates on Z_N", kToolName};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::string config_path, input, output, window, n_flag, lattice_flag, perm_flag, exps_flag;
    std::uint64_t seed = 0;
    app.add_option("--config", config_path, "JSON run configuration");
    app.add_option("--input", input, "signal or kernel CSV (header re,im)");
    app.add_option("--output", output, "report path");
    app.add_option("--seed", seed, "64-bit seed for the randomized searches");
    app.add_option("--N", n_flag, "modulus (gap: comma list)");
    app.add_option("--lattice", lattice_flag, "lattice steps a,b");
    app.add_option("--window", window, "gaussian or a window CSV");
    app.add_option("--perm", perm_flag, "id, c0..c6 or an index list such as 1,3,2,4");
    app.add_option("--exps", exps_flag, "exponents p1,p2[,p3,p4]; inf allowed");

    auto* modnorm = app.add_subcommand("modnorm", "mixed modulation norm of a signal or kernel");
    auto* certify = app.add_subcommand("certify", "boundedness certificates for a kernel");
    auto* gap = app.add_subcommand("gap", "Schur bound versus embedding bound for the Fourier matrix");
    auto* gabor = app.add_subcommand("gabor", "frame bounds and canonical dual window");
    for (auto* sub : {modnorm, certify, gap, gabor}) sub->fallthrough();

    std::vector<std::string> argv_store{kToolName};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        RunConfig c;
        bool n_from_config = false;
        if (!config_path.empty()) {
            std::ifstream is(config_path);
            if (!is) throw UsageError("config: cannot open '" + config_path + "'");
            json j;
            try {
                j = json::parse(is);
            } catch (const json::parse_error& e) {
                throw UsageError("config: " + std::string(e.what()));
            }
            c = config_from_json(j);
            n_from_config = j.contains("N");
        }

        std::vector<std::size_t> gap_ns{4, 9, 16, 25};
        if (app.count("--N")) {
            const auto parts = split(n_flag, ',');
            if (gap->parsed()) {
                gap_ns.clear();
                for (const auto& p : parts) gap_ns.push_back(parse_count(p, "N"));
            } else {
                if (parts.size() != 1) throw UsageError("N: a single modulus is expected for this command");
                c.n = parse_count(parts[0], "N");
            }
        } else if (n_from_config && gap->parsed()) {
            gap_ns = {c.n};
        }
        if (app.count("--lattice")) {
            const auto parts = split(lattice_flag, ',');
            if (parts.size() != 2) throw UsageError("lattice: expected a,b");
            c.a = parse_count(parts[0], "lattice");
            c.b = parse_count(parts[1], "lattice");
        }
        if (app.count("--window")) c.window = window;
        if (app.count("--perm")) c.permutation = perm_flag;
        if (app.count("--exps")) c.exponents = split(exps_flag, ',');
        if (app.count("--seed")) c.seed = seed;
        if (app.count("--output")) c.output = output;
        validate(c);

        if (modnorm->parsed()) return cmd_modnorm(c, input, out);
        if (certify->parsed()) return cmd_certify(c, input, out);
        if (gap->parsed()) return cmd_gap(c, gap_ns, out);
        return cmd_gabor(c, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const MathPreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kPrecondition;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}

} // namespace tfk::cli
