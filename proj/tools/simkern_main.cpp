/*
 * simkern: stratification, principal-minor positivity, and simultaneous
 * Hadamard-power kernels of Hermitian matrices, in exact arithmetic.
 *
 * Exit codes: 0 success, 1 property violation, 2 invalid input.
 */

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "simkern/analyze.hpp"

namespace {

using namespace simkern;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInvalidInput = 2;

struct CommonOpts {
    std::string input = "-";
    std::string out_path;
    std::string format = "json";
    std::string domain;  // optional coercion target
    double tolerance = 1e-9;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << file.rdbuf();
    return ss.str();
}

AnyMatrix load_matrix(const CommonOpts& opts) {
    float_policy().tau = opts.tolerance;
    AnyMatrix m = matrix_from_text(read_input(opts.input));
    if (!opts.domain.empty()) m = convert_domain(m, opts.domain);
    return m;
}

void render_table(const Json& j, std::ostream& os, int indent = 0) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() || (value.is_array() && !value.empty() &&
                                      (value.front().is_object() || value.front().is_array()))) {
                os << pad << key << ":\n";
                render_table(value, os, indent + 1);
            } else {
                os << pad << key << ": " << value.dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& value : j) {
            if (value.is_object() || value.is_array()) {
                render_table(value, os, indent);
                os << "\n";
            } else {
                os << pad << value.dump() << "\n";
            }
        }
    } else {
        os << pad << j.dump() << "\n";
    }
}

void write_out(const std::string& body, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream file(out_path);
    if (!file) throw ParseError("cannot open output path '" + out_path + "'");
    file << body;
}

void emit(const Json& j, const CommonOpts& opts) {
    std::ostringstream body;
    if (opts.format == "table")
        render_table(j, body);
    else
        body << j.dump() << "\n";
    write_out(body.str(), opts.out_path);
}

void emit_lines(const std::vector<Json>& lines, const CommonOpts& opts) {
    std::ostringstream body;
    for (const Json& line : lines) {
        if (opts.format == "table") {
            body << line.value("status", line.value("summary", "?")) << "  "
                 << line.value("check", "");
            if (line.contains("detail")) body << "  (" << line.at("detail").get<std::string>() << ")";
            body << "\n";
        } else {
            body << line.dump() << "\n";
        }
    }
    write_out(body.str(), opts.out_path);
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_input = true) {
    if (with_input) cmd->add_option("input", opts.input, "matrix file, or '-' for stdin");
    cmd->add_option("--out", opts.out_path, "write the report to a file instead of stdout");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--tolerance", opts.tolerance, "zero tolerance for the float domain");
    cmd->add_option("--domain", opts.domain, "coerce the parsed matrix into this domain")
        ->check(CLI::IsMember({"rational", "gaussian-rational", "gf", "float"}));
}

std::map<std::string, std::string> parse_params(const std::string& text) {
    std::map<std::string, std::string> params;
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ParseError("generator parameters must be key=value, got '" + item + "'");
        params[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return params;
}

template <typename Fn>
Json on_hermitian(const AnyMatrix& any, Fn&& fn) {
    return std::visit(
        [&](const auto& m) -> Json {
            using T = typename std::decay_t<decltype(m)>::value_type;
            if constexpr (std::is_same_v<T, PrimeFieldElement>) {
                throw UnsupportedDomainError(
                    "this operation needs an ordered complex-capable domain, not GF(p)");
            } else {
                return fn(HermitianMatrix<T>(m));
            }
        },
        any);
}

int run(int argc, char** argv) {
    CLI::App app{"exact stratification and simultaneous Hadamard-power kernels"};
    app.require_subcommand(1);

    // analyze
    CommonOpts analyze_opts;
    std::string analyze_group = "trivial";
    auto* cmd_analyze = app.add_subcommand("analyze", "full report for one matrix");
    add_common(cmd_analyze, analyze_opts);
    cmd_analyze->add_option("--group", analyze_group,
                            "trivial | roots:<k> | circle | nonzero | cyclic:<g>");

    // pmp
    CommonOpts pmp_opts;
    std::size_t pmp_k = 0;
    bool pmp_order_flag = false;
    auto* cmd_pmp = app.add_subcommand("pmp", "principal-minor positivity");
    add_common(cmd_pmp, pmp_opts);
    auto* pmp_k_opt = cmd_pmp->add_option("--k", pmp_k, "test the k-PMP property");
    cmd_pmp->add_flag("--order", pmp_order_flag, "report the maximal k (the PMP order)");

    // psrp
    CommonOpts psrp_opts;
    std::size_t psrp_k = 0;
    auto* cmd_psrp = app.add_subcommand("psrp", "principal submatrix rank property");
    add_common(cmd_psrp, psrp_opts);
    cmd_psrp->add_option("--k", psrp_k, "test the k-PSRP property")->required();

    // partition
    CommonOpts partition_opts;
    std::string partition_group = "trivial";
    bool partition_stratum = false;
    bool partition_certificates = false;
    auto* cmd_partition = app.add_subcommand("partition", "stratification partitions");
    add_common(cmd_partition, partition_opts);
    cmd_partition->add_option("--group", partition_group,
                              "trivial | roots:<k> | circle | nonzero | cyclic:<g>");
    cmd_partition->add_flag("--stratum", partition_stratum,
                            "compute the stratum partition (needs 3-PMP input)");
    cmd_partition->add_flag("--certificates", partition_certificates,
                            "include the rank-one certificate report");

    // kernel
    CommonOpts kernel_opts;
    bool kernel_simultaneous = false;
    bool kernel_block_ones = false;
    bool kernel_rectangular = false;
    std::string kernel_combination;
    auto* cmd_kernel = app.add_subcommand("kernel", "simultaneous Hadamard-power kernels");
    add_common(cmd_kernel, kernel_opts);
    cmd_kernel->add_flag("--simultaneous", kernel_simultaneous,
                         "kernel of all Hadamard powers (default)");
    cmd_kernel->add_flag("--block-ones", kernel_block_ones,
                         "kernel of J_pi for pi = pi^{1}(A)");
    cmd_kernel->add_flag("--rectangular", kernel_rectangular,
                         "any-field recipe: column partition + simultaneous kernel by row reduction");
    cmd_kernel->add_option("--combination", kernel_combination,
                           "kernel of sum c_j A^{oj} for positive c0,c1,...");
    bool kernel_t3pmp = false;
    cmd_kernel->add_flag("--t3pmp", kernel_t3pmp,
                         "all four kernel spaces and their pairwise equality table");

    // generate
    CommonOpts generate_opts;
    std::string generate_family_name;
    std::string generate_params;
    std::uint64_t generate_seed = 0;
    auto* cmd_generate = app.add_subcommand("generate", "matrix families with certificates");
    cmd_generate->add_option("family", generate_family_name, "family name")->required();
    cmd_generate->add_option("--params", generate_params, "comma-separated key=value list");
    cmd_generate->add_option("--seed", generate_seed, "seed for the random families");
    add_common(cmd_generate, generate_opts, /*with_input=*/false);

    // verify
    CommonOpts verify_opts;
    std::vector<std::string> verify_positionals;
    std::string verify_corpus;
    auto* cmd_verify = app.add_subcommand("verify", "run the theorem battery");
    cmd_verify->add_option("args", verify_positionals,
                           "[suite] [matrix file|-]; suites filter by check-name prefix");
    cmd_verify->add_option("--corpus", verify_corpus, "seed range A..B of generated matrices");
    cmd_verify->add_option("--out", verify_opts.out_path, "write the report to a file");
    cmd_verify->add_option("--format", verify_opts.format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    cmd_verify->add_option("--tolerance", verify_opts.tolerance, "float zero tolerance");

    CLI11_PARSE(app, argc, argv);

    if (cmd_analyze->parsed()) {
        GroupSpec group = GroupSpec::parse(analyze_group);
        emit(analyze_matrix(load_matrix(analyze_opts), group), analyze_opts);
        return kExitOk;
    }

    if (cmd_pmp->parsed()) {
        AnyMatrix any = load_matrix(pmp_opts);
        Json out = on_hermitian(any, [&](const auto& a) -> Json {
            Json j{{"n", a.dim()}};
            if (pmp_order_flag || pmp_k_opt->count() == 0) j["pmp_order"] = pmp_order(a);
            if (pmp_k_opt->count() > 0) {
                j["k"] = pmp_k;
                j["k_pmp"] = pmp_verdict_to_json(is_k_pmp(a, pmp_k));
            }
            return j;
        });
        emit(out, pmp_opts);
        return kExitOk;
    }

    if (cmd_psrp->parsed()) {
        AnyMatrix any = load_matrix(psrp_opts);
        Json out = on_hermitian(any, [&](const auto& a) -> Json {
            return Json{{"n", a.dim()},
                        {"k", psrp_k},
                        {"k_psrp", pmp_verdict_to_json(is_k_psrp(a, psrp_k))}};
        });
        emit(out, psrp_opts);
        return kExitOk;
    }

    if (cmd_partition->parsed()) {
        GroupSpec group = GroupSpec::parse(partition_group);
        AnyMatrix any = load_matrix(partition_opts);
        Json out = on_hermitian(any, [&](const auto& a) -> Json {
            Json j{{"n", a.dim()}, {"group", group.to_string()}};
            j["pi_min"] = partition_to_json(pi_min(a, group));
            if (partition_stratum || partition_certificates) {
                Partition ps = pi_stratum(a, group);
                j["pi_stratum"] = partition_to_json(ps);
                if (partition_certificates)
                    j["stratum_report"] =
                        stratum_report_to_json(rank_one_certificates(a, ps, group));
            }
            return j;
        });
        emit(out, partition_opts);
        return kExitOk;
    }

    if (cmd_kernel->parsed()) {
        AnyMatrix any = load_matrix(kernel_opts);
        Json out;
        if (kernel_rectangular || std::holds_alternative<Matrix<PrimeFieldElement>>(any)) {
            out = std::visit(
                [&](const auto& m) -> Json {
                    auto rk = rectangular_simultaneous_kernel(m);
                    return Json{{"column_partition", partition_to_json(rk.column_partition)},
                                {"kernel", kernel_to_json(rk.kernel)},
                                {"kernel_equals_block_sum_zero", rk.equals_block_sum_zero}};
                },
                any);
        } else {
            out = on_hermitian(any, [&](const auto& a) -> Json {
                Json j{{"n", a.dim()}};
                bool did_something = false;
                if (kernel_block_ones) {
                    Partition pi1 = pi_min(a, GroupSpec::trivial());
                    j["pi"] = partition_to_json(pi1);
                    j["kernel"] = kernel_to_json(ker_block_ones(pi1, a.mat().one()));
                    did_something = true;
                }
                if (kernel_t3pmp) {
                    j["t3pmp"] = t3pmp_report_to_json(verify_t3pmp(a));
                    did_something = true;
                }
                if (!kernel_combination.empty()) {
                    std::vector<Rational> coeff;
                    std::istringstream ss(kernel_combination);
                    std::string cell;
                    while (std::getline(ss, cell, ','))
                        coeff.push_back(Rational::from_string(cell));
                    j["combination_kernel"] =
                        kernel_to_json(positive_combination_kernel(a, coeff));
                    did_something = true;
                }
                if (kernel_simultaneous || !did_something)
                    j["simultaneous_kernel"] = kernel_to_json(simultaneous_kernel(a));
                return j;
            });
        }
        emit(out, kernel_opts);
        return kExitOk;
    }

    if (cmd_generate->parsed()) {
        float_policy().tau = generate_opts.tolerance;
        GeneratedAny gen =
            generate_family(generate_family_name, parse_params(generate_params), generate_seed);
        Json out{{"family", generate_family_name},
                 {"seed", generate_seed},
                 {"matrix", matrix_to_json(gen.matrix)},
                 {"certificate", certificate_to_json(gen.certificate)}};
        out["epsilon"] = gen.epsilon ? Json(gen.epsilon->to_string()) : Json(nullptr);
        emit(out, generate_opts);
        return gen.certificate.all_passed() ? kExitOk : kExitViolation;
    }

    if (cmd_verify->parsed()) {
        float_policy().tau = verify_opts.tolerance;
        // positionals: [suite] [input]; an argument is a suite name when it
        // matches a known check prefix
        static const std::vector<std::string> known_suites = {
            "t3pmp",   "stabilization", "kernel-dimension", "pmp-signature",
            "psrp",    "hns",           "tsimul",           "pexists",
            "tgroup4", "compression",   "rank-one",         "rectangular",
            "all"};
        std::string suite;
        std::string input;
        for (const auto& arg : verify_positionals) {
            bool is_suite =
                std::find(known_suites.begin(), known_suites.end(), arg) != known_suites.end();
            if (is_suite && suite.empty())
                suite = (arg == "all") ? "" : arg;
            else if (input.empty())
                input = arg;
            else
                throw ParseError("too many positional arguments to verify");
        }

        std::vector<Json> lines;
        bool ok = true;
        Json witness = nullptr;
        auto run_one = [&](const AnyMatrix& m, const Json& label) {
            BatteryResult result = theorem_battery(m, suite);
            for (Json& line : result.checks) {
                if (!label.is_null()) line["matrix"] = label;
                lines.push_back(std::move(line));
            }
            if (!result.ok && ok) {
                ok = false;
                witness = result.witness;
            }
        };

        if (!verify_corpus.empty()) {
            auto sep = verify_corpus.find("..");
            if (sep == std::string::npos)
                throw ParseError("corpus range must look like 1..100");
            std::uint64_t lo = std::stoull(verify_corpus.substr(0, sep));
            std::uint64_t hi = std::stoull(verify_corpus.substr(sep + 2));
            if (lo > hi) throw ParseError("empty corpus range");
            for (std::uint64_t seed = lo; seed <= hi; ++seed)
                run_one(corpus_matrix(seed), Json{{"corpus_seed", seed}});
        } else {
            CommonOpts in_opts = verify_opts;
            in_opts.input = input.empty() ? "-" : input;
            run_one(load_matrix(in_opts), nullptr);
        }
        Json summary{{"summary", ok ? "pass" : "fail"}, {"checks", lines.size()}};
        if (!ok) summary["witness"] = witness;
        lines.push_back(std::move(summary));
        emit_lines(lines, verify_opts);
        return ok ? kExitOk : kExitViolation;
    }

    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const VerificationFailed& e) {
        std::cerr << "property violation: " << e.what() << "\n";
        return kExitViolation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
}
