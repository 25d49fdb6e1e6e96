// Command line frontend: straightening arithmetic, canonical blocks, module
// and invariant reports, and the verification suites. JSON in, JSON out;
// --format text switches to the human rendering. Exit codes: 0 ok, 1 usage
// error, 2 verification failure.

#include <qcanon/invariants.hpp>
#include <qcanon/json_io.hpp>
#include <qcanon/kashiwara.hpp>
#include <qcanon/uq.hpp>
#include <qcanon/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

using namespace qcanon;
using njson = nlohmann::ordered_json;

namespace {

struct CommonOpts {
    std::string format = "json";
    std::string output;
    std::string cache_dir;
    std::size_t max_block = 0;
};

void add_common(CLI::App* sub, CommonOpts& c) {
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("-o,--output", c.output, "write output to this file instead of stdout");
    sub->add_option("--cache-dir", c.cache_dir,
                    "block cache directory (defaults to QCANON_CACHE_DIR)");
    sub->add_option("--max-block-size", c.max_block,
                    "refuse to solve blocks with more matrices than this");
}

std::unique_ptr<BlockCache> make_cache(const CommonOpts& c) {
    auto cache = c.cache_dir.empty()
                     ? std::make_unique<BlockCache>()
                     : std::make_unique<BlockCache>(std::filesystem::path(c.cache_dir));
    if (c.max_block) cache->set_max_block_size(c.max_block);
    return cache;
}

void emit(const CommonOpts& c, const std::string& payload) {
    if (c.output.empty()) {
        std::cout << payload << '\n';
        return;
    }
    std::ofstream out(c.output);
    if (!out) throw std::runtime_error("cannot open output file " + c.output);
    out << payload << '\n';
}

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open input file " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

AlgebraElement load_element(const std::string& path) { return element_from_json(read_input(path)); }

njson matrix_json(const ExponentMatrix& m) {
    njson rows = njson::array();
    for (int i = 0; i < m.n(); ++i) {
        njson row = njson::array();
        for (int j = 0; j < m.n(); ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

njson poly_json(const LaurentPoly& p) {
    njson a = njson::array();
    for (const auto& [e, c] : p.terms()) a.push_back(njson::array({e, c.str()}));
    return a;
}

njson poly_matrix_json(const PolyMatrix& m) {
    njson rows = njson::array();
    for (int i = 0; i < m.rows(); ++i) {
        njson row = njson::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(poly_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

/// "x[1,1]^2 x[2,2]" for a monomial index, "1" for the unit.
std::string word_str(const ExponentMatrix& a) {
    std::string out;
    for (int i = 0; i < a.n(); ++i) {
        for (int j = 0; j < a.n(); ++j) {
            const int e = a.at(i, j);
            if (e == 0) continue;
            if (!out.empty()) out += ' ';
            out += "x[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out.empty() ? "1" : out;
}

void emit_element(const CommonOpts& c, const AlgebraElement& e) {
    emit(c, c.format == "text" ? to_string(e) : to_json(e));
}

// ---------------------------------------------------------------------------

int cmd_mul(const CommonOpts& c, const std::string& file_a, const std::string& file_b) {
    auto a = load_element(file_a);
    auto b = load_element(file_b);
    if (a.n() != b.n()) throw std::invalid_argument("size mismatch");
    if (a.basis() != b.basis()) throw std::invalid_argument("basis mismatch");
    AlgebraElement prod(a.n(), a.basis());
    if (a.basis() == BasisTag::plain)
        prod = a * b;
    else if (a.basis() == BasisTag::modified)
        prod = to_modified(to_plain_from_modified(a) * to_plain_from_modified(b));
    else
        throw std::invalid_argument("plain or modified basis required");
    emit_element(c, prod);
    return 0;
}

int cmd_bar(const CommonOpts& c, const std::string& file) {
    auto e = load_element(file);
    if (e.basis() == BasisTag::plain)
        emit_element(c, bar_map(e));
    else if (e.basis() == BasisTag::modified)
        emit_element(c, to_modified(bar_map(to_plain_from_modified(e))));
    else
        throw std::invalid_argument("plain or modified basis required");
    return 0;
}

int cmd_canonical(const CommonOpts& c, int n, const std::vector<int>& ro,
                  const std::vector<int>& co) {
    if (static_cast<int>(ro.size()) != n || static_cast<int>(co.size()) != n)
        throw std::invalid_argument("ro and co must have n entries");
    if (std::accumulate(ro.begin(), ro.end(), 0) != std::accumulate(co.begin(), co.end(), 0))
        throw std::invalid_argument("inconsistent sums");
    auto cache = make_cache(c);
    const auto& blk = cache->block(ro, co);
    if (c.format == "json") {
        emit(c, to_json(blk));
        return 0;
    }
    std::ostringstream out;
    out << "block ro=[";
    for (size_t i = 0; i < ro.size(); ++i) out << (i ? "," : "") << ro[i];
    out << "] co=[";
    for (size_t i = 0; i < co.size(); ++i) out << (i ? "," : "") << co[i];
    out << "], " << blk.order.size() << " elements";
    for (size_t r = 0; r < blk.order.size(); ++r) {
        out << "\nb(" << word_str(blk.order[r]) << ") =";
        bool any = false;
        for (size_t s = r; s < blk.order.size(); ++s) {
            const auto& h = blk.transition[r][s];
            if (h.is_zero()) continue;
            out << (any ? " + " : " ") << "(" << to_string(h) << ") x(" << word_str(blk.order[s])
                << ")";
            any = true;
        }
    }
    emit(c, out.str());
    return 0;
}

int cmd_minor(const CommonOpts& c, int n, std::vector<int> rows, std::vector<int> cols,
              bool expand) {
    if (rows.empty() || rows.size() != cols.size())
        throw std::invalid_argument("rows and cols must be nonempty and of equal size");
    for (int& r : rows) --r;
    for (int& col : cols) --col;
    auto el = quantum_minor(n, rows, cols);
    if (expand) {
        auto cache = make_cache(c);
        el = expand_in_canonical(*cache, el);
    }
    emit_element(c, el);
    return 0;
}

int cmd_act(const CommonOpts& c, const std::string& gen, const std::string& side,
            const std::string& file) {
    auto g = parse_generator(gen);
    auto e = load_element(file);
    emit_element(c, side == "L" ? act_L(g, e) : act_R(g, e));
    return 0;
}

int cmd_kashiwara(const CommonOpts& c, const std::string& op, int i, const std::string& file) {
    auto e = load_element(file);
    emit_element(c, op == "E" ? tilde_E(i, e) : tilde_F(i, e));
    return 0;
}

CoidealSpec parse_coideal(int n, const std::string& text) {
    if (text == "lowering") return CoidealSpec::lowering(n);
    if (text == "torus") return CoidealSpec::torus(n);
    if (text.rfind("levi=", 0) == 0) {
        std::vector<int> roots;
        std::stringstream ss(text.substr(5));
        for (std::string item; std::getline(ss, item, ',');) roots.push_back(std::stoi(item));
        return CoidealSpec::levi(n, roots);
    }
    CoidealSpec spec;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');)
        spec.generators.push_back(parse_generator(item));
    return spec;
}

int cmd_invariants(const CommonOpts& c, int n, const std::string& s_text, int truncation) {
    auto spec = parse_coideal(n, s_text);
    auto cache = make_cache(c);
    auto blocks = invariant_basis(*cache, n, spec, truncation);
    auto check = string_property_check(*cache, n, spec, truncation);
    if (c.format == "json") {
        njson report;
        report["S"] = njson::array();
        for (const auto& g : spec.generators) report["S"].push_back(to_string(g));
        report["truncation"] = truncation;
        report["blocks"] = njson::array();
        for (const auto& blk : blocks) {
            njson jb;
            jb["weight"] = blk.ro;
            jb["members"] = njson::array();
            for (const auto& a : blk.members) jb["members"].push_back(matrix_json(a));
            report["blocks"].push_back(std::move(jb));
        }
        report["checks"] = njson{{"string_property", check.passed ? "pass" : check.detail}};
        emit(c, report.dump());
        return 0;
    }
    std::ostringstream out;
    out << "S =";
    for (const auto& g : spec.generators) out << " " << to_string(g);
    size_t members = 0;
    for (const auto& blk : blocks) members += blk.members.size();
    out << "; truncation " << truncation << "; " << blocks.size() << " blocks, " << members
        << " members";
    for (const auto& blk : blocks) {
        out << "\nweight [";
        for (size_t i = 0; i < blk.ro.size(); ++i) out << (i ? "," : "") << blk.ro[i];
        out << "]:";
        for (const auto& a : blk.members) out << " b(" << word_str(a) << ")";
    }
    out << "\nstring_property: " << (check.passed ? "pass" : check.detail);
    emit(c, out.str());
    return 0;
}

int cmd_module(const CommonOpts& c, int n, const std::vector<int>& lambda) {
    auto cache = make_cache(c);
    auto mod = borel_weil_module(*cache, n, lambda);
    if (c.format == "json") {
        njson report;
        report["lambda"] = mod.fundamental;
        report["dimension"] = mod.members.size();
        report["members"] = njson::array();
        for (const auto& a : mod.members) report["members"].push_back(matrix_json(a));
        report["highest_weight_member"] = matrix_json(mod.members[mod.highest]);
        njson actions;
        for (int i = 1; i < n; ++i)
            actions["E" + std::to_string(i)] = poly_matrix_json(mod.raise_action[i - 1]);
        for (int i = 1; i < n; ++i)
            actions["F" + std::to_string(i)] = poly_matrix_json(mod.lower_action[i - 1]);
        for (int i = 1; i < n; ++i)
            actions["K" + std::to_string(i)] = poly_matrix_json(mod.torus_action[i - 1]);
        report["actions"] = std::move(actions);
        emit(c, report.dump());
        return 0;
    }
    std::ostringstream out;
    out << "lambda = [";
    for (size_t i = 0; i < mod.fundamental.size(); ++i) out << (i ? "," : "") << mod.fundamental[i];
    out << "], dimension " << mod.members.size();
    for (size_t j = 0; j < mod.members.size(); ++j)
        out << "\n  b(" << word_str(mod.members[j]) << ")" << (j == mod.highest ? "  (highest)" : "");
    emit(c, out.str());
    return 0;
}

int cmd_verify(const CommonOpts& c, const std::string& suite, unsigned seed, double timeout) {
    std::vector<std::string> names;
    if (suite == "all") {
        names = verify_suite_names();
    } else {
        const auto& known = verify_suite_names();
        if (std::find(known.begin(), known.end(), suite) == known.end())
            throw std::invalid_argument("unknown verify suite");
        names.push_back(suite);
    }
    auto cache = make_cache(c);
    const auto start = std::chrono::steady_clock::now();
    std::vector<CheckResult> results;
    bool timed_out = false;
    for (const auto& name : names) {
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (timeout > 0 && elapsed > timeout && !results.empty()) {
            timed_out = true;
            break;
        }
        results.push_back(run_verify_suite(*cache, name, seed));
    }
    bool all_passed = !timed_out;
    for (const auto& r : results) all_passed = all_passed && r.passed;
    const char* status = timed_out ? "timeout" : (all_passed ? "pass" : "fail");
    if (c.format == "json") {
        njson report;
        report["seed"] = seed;
        report["suites"] = njson::array();
        for (const auto& r : results)
            report["suites"].push_back(
                njson{{"suite", r.name}, {"status", r.passed ? "pass" : "fail"}, {"detail", r.detail}});
        report["status"] = status;
        emit(c, report.dump());
    } else {
        std::ostringstream out;
        for (const auto& r : results)
            out << (r.passed ? "PASS" : "FAIL") << " [" << r.name << "]: " << r.detail << "\n";
        out << "status: " << status;
        emit(c, out.str());
    }
    return all_passed ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dual canonical basis calculator for quantum matrix coordinate rings"};
    app.require_subcommand(1);

    CommonOpts common;

    auto* mul = app.add_subcommand("mul", "straightened product of two element files");
    std::string mul_a, mul_b;
    mul->add_option("a", mul_a, "first element JSON file (- for stdin)")->required();
    mul->add_option("b", mul_b, "second element JSON file")->required();
    add_common(mul, common);

    auto* bar = app.add_subcommand("bar", "bar involution of an element file");
    std::string bar_file;
    bar->add_option("file", bar_file, "element JSON file (- for stdin)")->required();
    add_common(bar, common);

    auto* canonical = app.add_subcommand("canonical", "solve and dump one weight block");
    int can_n = 0;
    std::vector<int> can_ro, can_co;
    canonical->add_option("-n,--n", can_n, "matrix size")->required();
    canonical->add_option("--ro", can_ro, "row sums")->required()->delimiter(',');
    canonical->add_option("--co", can_co, "column sums")->required()->delimiter(',');
    add_common(canonical, common);

    auto* minor = app.add_subcommand("minor", "quantum minor on chosen rows and columns");
    int min_n = 0;
    std::vector<int> min_rows, min_cols;
    bool min_expand = false;
    minor->add_option("-n,--n", min_n, "matrix size")->required();
    minor->add_option("--rows", min_rows, "1-based row set")->required()->delimiter(',');
    minor->add_option("--cols", min_cols, "1-based column set")->required()->delimiter(',');
    minor->add_flag("--expand", min_expand, "expand in the canonical basis");
    add_common(minor, common);

    auto* act = app.add_subcommand("act", "apply a translation action to an element file");
    std::string act_gen, act_side, act_file;
    act->add_option("--gen", act_gen, "generator, e.g. E1, F2, K1, K1inv")->required();
    act->add_option("--side", act_side, "L or R")->required()->check(CLI::IsMember({"L", "R"}));
    act->add_option("file", act_file, "plain-basis element JSON file (- for stdin)")->required();
    add_common(act, common);

    auto* kash = app.add_subcommand("kashiwara", "apply a Kashiwara operator to an element file");
    std::string kash_op, kash_file;
    int kash_i = 1;
    kash->add_option("--op", kash_op, "E (raising) or F (lowering)")
        ->required()
        ->check(CLI::IsMember({"E", "F"}));
    kash->add_option("-i,--i", kash_i, "row index, 1 <= i < n")->required();
    kash->add_option("file", kash_file, "modified-basis element JSON file (- for stdin)")->required();
    add_common(kash, common);

    auto* invariants = app.add_subcommand("invariants", "invariant canonical elements under S");
    int inv_n = 0, inv_trunc = 0;
    std::string inv_s;
    invariants->add_option("-n,--n", inv_n, "matrix size")->required();
    invariants->add_option("--S", inv_s, "lowering, torus, levi=<roots>, or generator list")
        ->required();
    invariants->add_option("--truncation", inv_trunc, "maximum total degree")->required();
    add_common(invariants, common);

    auto* module_cmd = app.add_subcommand("module", "weight module on invariant elements");
    int mod_n = 0;
    std::vector<int> mod_lambda;
    module_cmd->add_option("-n,--n", mod_n, "matrix size")->required();
    module_cmd->add_option("--lambda", mod_lambda, "fundamental weight coordinates")
        ->required()
        ->delimiter(',');
    add_common(module_cmd, common);

    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::string ver_suite = "all";
    unsigned ver_seed = 42;
    double ver_timeout = 0;
    verify->add_option("--suite", ver_suite, "suite name, or all");
    verify->add_option("--seed", ver_seed, "seed for randomized suites");
    verify->add_option("--timeout", ver_timeout,
                       "soft time limit in seconds, checked between suites");
    add_common(verify, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(mul)) return cmd_mul(common, mul_a, mul_b);
        if (app.got_subcommand(bar)) return cmd_bar(common, bar_file);
        if (app.got_subcommand(canonical)) return cmd_canonical(common, can_n, can_ro, can_co);
        if (app.got_subcommand(minor)) return cmd_minor(common, min_n, min_rows, min_cols, min_expand);
        if (app.got_subcommand(act)) return cmd_act(common, act_gen, act_side, act_file);
        if (app.got_subcommand(kash)) return cmd_kashiwara(common, kash_op, kash_i, kash_file);
        if (app.got_subcommand(invariants)) return cmd_invariants(common, inv_n, inv_s, inv_trunc);
        if (app.got_subcommand(module_cmd)) return cmd_module(common, mod_n, mod_lambda);
        if (app.got_subcommand(verify))
            return cmd_verify(common, ver_suite, ver_seed, ver_timeout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
