// Command-line front end: parse shapes, dispatch to the library routes, and
// serialize results as JSON, CSV, or plain text.  Exit codes: 0 success,
// 1 usage error, 2 work budget exceeded, 3 cross-check failure.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stirling/stirling.hpp"

namespace {

using nlohmann::ordered_json;
using namespace stirling;

struct Document {
    ordered_json json;
    std::vector<std::vector<std::string>> rows;  // CSV table, first row = header
    std::string plain;
    int exit_code = 0;
};

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

void emit(const Document& doc, const std::string& format) {
    if (format == "json") {
        std::cout << doc.json.dump(2) << '\n';
    } else if (format == "csv") {
        for (const auto& row : doc.rows) {
            for (size_t i = 0; i < row.size(); ++i) {
                if (i) std::cout << ',';
                std::cout << csv_escape(row[i]);
            }
            std::cout << '\n';
        }
    } else {
        std::cout << doc.plain;
    }
}

std::string rational_text(const BigRational& v) {
    std::string s = to_decimal(numerator_of(v));
    if (denominator_of(v) != 1) s += "/" + to_decimal(denominator_of(v));
    return s;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string join_ints(const std::vector<int>& xs, char sep) {
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(xs[i]);
    }
    return s;
}

std::string blocks_text(const std::vector<std::vector<int>>& blocks) {
    std::string s;
    for (const auto& b : blocks) s += "{" + join_ints(b, ',') + "}";
    return s;
}

std::vector<MultisetShape> load_seed_shapes(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parameter_error("cannot open seed shape file: " + path);
    std::vector<MultisetShape> shapes;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        const std::string text = line.substr(first, last - first + 1);
        if (text[0] == '#') continue;
        shapes.push_back(MultisetShape::parse(text));
    }
    return shapes;
}

Document run_enumerate(const MultisetShape& shape, long long limit, long long cap) {
    const BigInt count = sp_count(shape);
    std::vector<Word> words;
    if (limit > 0) {
        long long listed = 0;
        for_each_stirling_word(shape, cap, [&](const Word& w) {
            if (listed < limit) {
                words.push_back(w);
                ++listed;
            }
        });
    }
    Document doc;
    doc.json["command"] = "enumerate";
    doc.json["shape"] = shape.to_string();
    doc.json["count"] = to_decimal(count);
    doc.json["limit"] = limit;
    ordered_json arr = ordered_json::array();
    for (const auto& w : words) arr.push_back(join_ints(w, ','));
    doc.json["words"] = std::move(arr);
    doc.rows.push_back({"word"});
    doc.plain = "count=" + to_decimal(count) + "\n";
    for (const auto& w : words) {
        doc.rows.push_back({join_ints(w, ',')});
        doc.plain += join_ints(w, ',') + "\n";
    }
    return doc;
}

Document run_eulerian(const MultisetShape& shape, bool brute, long long cap) {
    const EulerianTable rec = eulerian_rec(shape);
    const int first = shape.empty() ? 0 : 1;  // nonempty words always end in a descent
    BigInt row_sum = 0;
    for (const BigInt& c : rec.counts) row_sum += c;
    Document doc;
    doc.json["command"] = "eulerian";
    doc.json["shape"] = shape.to_string();
    doc.json["first_descents"] = first;
    ordered_json arr = ordered_json::array();
    for (size_t i = static_cast<size_t>(first); i < rec.counts.size(); ++i)
        arr.push_back(to_decimal(rec.counts[i]));
    doc.json["counts"] = std::move(arr);
    doc.json["row_sum"] = to_decimal(row_sum);
    doc.rows.push_back({"descents", "count"});
    doc.plain = "shape=(" + shape.to_string() + ")\n";
    for (size_t i = static_cast<size_t>(first); i < rec.counts.size(); ++i) {
        doc.rows.push_back({std::to_string(i), to_decimal(rec.counts[i])});
        doc.plain += "descents=" + std::to_string(i) + " count=" + to_decimal(rec.counts[i]) + "\n";
    }
    if (brute) {
        const EulerianTable enumerated = eulerian_brute(shape, cap);
        const bool consistent = enumerated.counts == rec.counts;
        ordered_json brr = ordered_json::array();
        for (size_t i = static_cast<size_t>(first); i < enumerated.counts.size(); ++i)
            brr.push_back(to_decimal(enumerated.counts[i]));
        doc.json["enumerated_counts"] = std::move(brr);
        doc.json["consistent"] = consistent;
        doc.plain += std::string("consistent=") + bool_text(consistent) + "\n";
        if (!consistent) doc.exit_code = 3;
    }
    return doc;
}

Document run_poly(const MultisetShape& shape, bool has_eval, long long eval_m, bool coeffs,
                  const std::string& route) {
    if (!has_eval) coeffs = true;
    Document doc;
    doc.json["command"] = "poly";
    doc.json["shape"] = shape.to_string();
    doc.json["degree"] = shape.total();
    if (has_eval) {
        BigInt B, b;
        std::string route_used = route;
        if (eval_m < 0) {
            route_used = "interpolation";
            const StirlingPolyPair pair = to_polynomial(shape);
            const BigRational Bv = poly_eval(pair.B, BigRational(eval_m));
            const BigRational bv = poly_eval(pair.b, BigRational(eval_m));
            if (denominator_of(Bv) != 1 || denominator_of(bv) != 1)
                throw consistency_error("polynomial evaluation is not an integer");
            B = numerator_of(Bv);
            b = numerator_of(bv);
        } else {
            const int m = static_cast<int>(eval_m);
            if (route == "series") {
                B = B_series(shape, m);
                b = b_series(shape, m);
            } else if (route == "rec") {
                B = B_rec(shape, m);
                b = b_rec(shape, m);
            } else if (route == "conv") {
                B = B_conv(shape, m);
                b = b_conv(shape, m);
            } else {
                B = closed_form_S(shape, m);
                b = closed_form_s(shape, m);
            }
        }
        doc.json["eval"] = eval_m;
        doc.json["route"] = route_used;
        doc.json["B"] = to_decimal(B);
        doc.json["b"] = to_decimal(b);
        doc.rows.push_back({"shape", "m", "route", "B", "b"});
        doc.rows.push_back({shape.to_string(), std::to_string(eval_m), route_used, to_decimal(B),
                            to_decimal(b)});
        doc.plain += "B(" + std::to_string(eval_m) + ")=" + to_decimal(B) + "\n";
        doc.plain += "b(" + std::to_string(eval_m) + ")=" + to_decimal(b) + "\n";
    }
    if (coeffs) {
        const StirlingPolyPair pair = to_polynomial(shape);
        ordered_json bc = ordered_json::array(), sc = ordered_json::array();
        if (!has_eval) doc.rows.push_back({"power", "B", "b"});
        for (int i = 0; i <= shape.total(); ++i) {
            const std::string bi = rational_text(pair.B.coefficient(i));
            const std::string si = rational_text(pair.b.coefficient(i));
            bc.push_back(bi);
            sc.push_back(si);
            if (!has_eval) doc.rows.push_back({std::to_string(i), bi, si});
            doc.plain += "x^" + std::to_string(i) + ": B=" + bi + " b=" + si + "\n";
        }
        doc.json["B_coefficients"] = std::move(bc);
        doc.json["b_coefficients"] = std::move(sc);
    }
    return doc;
}

Document run_poset(const MultisetShape& shape, bool dot) {
    const KStirlingPoset poset = build_poset(shape);
    Document doc;
    doc.json["command"] = "poset";
    doc.json["shape"] = shape.to_string();
    doc.json["elements"] = poset.base.n;
    ordered_json covers = ordered_json::array();
    for (const auto& [lo, hi] : poset.base.covers)
        covers.push_back(ordered_json::array({lo, hi}));
    doc.json["covers"] = std::move(covers);
    doc.json["anchors"] = poset.anchors;
    doc.rows.push_back({"lower", "upper"});
    for (const auto& [lo, hi] : poset.base.covers)
        doc.rows.push_back({std::to_string(lo), std::to_string(hi)});
    if (dot) {
        std::string text = "digraph poset {\n  rankdir=BT;\n";
        for (int v = 1; v <= poset.base.n; ++v) text += "  " + std::to_string(v) + ";\n";
        for (const auto& [lo, hi] : poset.base.covers)
            text += "  " + std::to_string(lo) + " -> " + std::to_string(hi) + ";\n";
        text += "}\n";
        doc.json["dot"] = text;
        doc.plain = text;
    } else {
        doc.plain = "elements=" + std::to_string(poset.base.n) + "\n";
        for (const auto& [lo, hi] : poset.base.covers)
            doc.plain += std::to_string(lo) + " < " + std::to_string(hi) + "\n";
    }
    return doc;
}

Document run_order_poly(const MultisetShape& shape, int m, bool strict, long long cap) {
    const KStirlingPoset poset = build_poset(shape);
    const BigInt value = omega(poset, m, strict, cap);
    Document doc;
    doc.json["command"] = "order-poly";
    doc.json["shape"] = shape.to_string();
    doc.json["m"] = m;
    doc.json["strict"] = strict;
    doc.json["value"] = to_decimal(value);
    doc.rows.push_back({"shape", "m", "strict", "value"});
    doc.rows.push_back({shape.to_string(), std::to_string(m), bool_text(strict),
                        to_decimal(value)});
    doc.plain = "value=" + to_decimal(value) + "\n";
    return doc;
}

Document run_systems(const MultisetShape& shape, int n, int m, const std::string& kind,
                     bool list, long long cap) {
    Document doc;
    ordered_json arr = ordered_json::array();
    std::string plain_list;
    BigInt count;
    if (kind == "partition") {
        std::function<void(const PartitionSystem&)> emit_fn;
        if (list)
            emit_fn = [&](const PartitionSystem& sys) {
                ordered_json entry;
                entry["zero"] = sys.pi0.blocks;
                entry["stages"] = sys.pi;
                arr.push_back(std::move(entry));
                plain_list += "zero=" + blocks_text(sys.pi0.blocks) + " stages=";
                for (size_t j = 0; j < sys.pi.size(); ++j) {
                    if (j) plain_list += " / ";
                    plain_list += blocks_text(sys.pi[j]);
                }
                plain_list += "\n";
            };
        count = count_partition_systems(shape, n, m, cap, emit_fn);
    } else {
        std::function<void(const PermutationSystem&)> emit_fn;
        if (list)
            emit_fn = [&](const PermutationSystem& sys) {
                ordered_json entry;
                entry["zero"] = sys.sigma0.blocks;
                entry["stages"] = sys.sigma;
                arr.push_back(std::move(entry));
                plain_list += "zero=" + blocks_text(sys.sigma0.blocks) + " stages=";
                for (size_t j = 0; j < sys.sigma.size(); ++j) {
                    if (j) plain_list += " / ";
                    plain_list += join_ints(sys.sigma[j], ',');
                }
                plain_list += "\n";
            };
        count = count_permutation_systems(shape, n, m, cap, emit_fn);
    }
    doc.json["command"] = "systems";
    doc.json["shape"] = shape.to_string();
    doc.json["n"] = n;
    doc.json["m"] = m;
    doc.json["kind"] = kind;
    doc.json["count"] = to_decimal(count);
    if (list) doc.json["systems"] = std::move(arr);
    doc.rows.push_back({"shape", "n", "m", "kind", "count"});
    doc.rows.push_back({shape.to_string(), std::to_string(n), std::to_string(m), kind,
                        to_decimal(count)});
    doc.plain = "count=" + to_decimal(count) + "\n" + plain_list;
    return doc;
}

Document run_odd(int n, int k, bool brute, long long cap) {
    const BigInt S = S_odd(n, k);
    const BigInt s = s_odd(n, k);
    Document doc;
    doc.json["command"] = "odd";
    doc.json["n"] = n;
    doc.json["k"] = k;
    doc.json["S"] = to_decimal(S);
    doc.json["s"] = to_decimal(s);
    doc.rows.push_back({"n", "k", "S", "s"});
    doc.rows.push_back({std::to_string(n), std::to_string(k), to_decimal(S), to_decimal(s)});
    doc.plain = "S=" + to_decimal(S) + " s=" + to_decimal(s) + "\n";
    if (brute) {
        const BigInt Se = count_leader_partitions(n, k, cap);
        const BigInt se = count_leader_permutations(n, k, cap);
        const bool consistent = Se == S && se == s;
        doc.json["S_enumerated"] = to_decimal(Se);
        doc.json["s_enumerated"] = to_decimal(se);
        doc.json["consistent"] = consistent;
        doc.plain += std::string("consistent=") + bool_text(consistent) + "\n";
        if (!consistent) doc.exit_code = 3;
    }
    return doc;
}

Document run_central(int t, int n, int k, bool brute, bool basis, long long cap) {
    const BigInt S = S_t(t, n, k);
    const BigInt s = s_t(t, n, k);
    Document doc;
    doc.json["command"] = "central";
    doc.json["t"] = t;
    doc.json["n"] = n;
    doc.json["k"] = k;
    doc.json["S"] = to_decimal(S);
    doc.json["s"] = to_decimal(s);
    doc.rows.push_back({"t", "n", "k", "S", "s"});
    doc.rows.push_back({std::to_string(t), std::to_string(n), std::to_string(k), to_decimal(S),
                        to_decimal(s)});
    doc.plain = "S=" + to_decimal(S) + " s=" + to_decimal(s) + "\n";
    if (brute) {
        const BigInt Se = count_tuple_systems(t, n, k, SystemKind::partitions, cap);
        const BigInt se = count_tuple_systems(t, n, k, SystemKind::permutations, cap);
        const bool consistent = Se == S && se == s;
        doc.json["S_enumerated"] = to_decimal(Se);
        doc.json["s_enumerated"] = to_decimal(se);
        doc.json["consistent"] = consistent;
        doc.plain += std::string("consistent=") + bool_text(consistent) + "\n";
        if (!consistent) doc.exit_code = 3;
    }
    if (basis) {
        const bool ok = verify_basis_identity(t, n);
        doc.json["basis"] = ok;
        doc.plain += std::string("basis=") + bool_text(ok) + "\n";
        if (!ok) doc.exit_code = 3;
    }
    return doc;
}

Document run_verify(int max_K, int max_m, const std::string& only, long long cap,
                    const std::vector<MultisetShape>& seeds) {
    VerifyLimits limits;
    limits.max_K = max_K;
    limits.max_m = max_m;
    limits.cap = cap;
    limits.seed_shapes = seeds;
    limits.only = only;
    const VerifyReport report = verify_battery(limits);
    Document doc;
    doc.json["command"] = "verify";
    doc.json["max_K"] = max_K;
    doc.json["max_m"] = max_m;
    doc.json["only"] = only;
    ordered_json fams = ordered_json::array();
    doc.rows.push_back({"family", "cases", "skipped", "pass", "counterexample"});
    for (const auto& f : report.families) {
        ordered_json fj;
        fj["family"] = f.family;
        fj["cases"] = f.cases;
        fj["skipped"] = f.skipped;
        fj["pass"] = f.pass;
        fj["counterexample"] = f.counterexample;
        fams.push_back(std::move(fj));
        doc.rows.push_back({f.family, std::to_string(f.cases), std::to_string(f.skipped),
                            bool_text(f.pass), f.counterexample});
    }
    doc.json["families"] = std::move(fams);
    doc.json["overall"] = report.all_pass();
    doc.plain = format_report(report);
    if (!report.all_pass()) doc.exit_code = 3;
    return doc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics of Stirling permutations: descent tables, the "
                 "associated polynomial pair, order polynomials, partition/permutation "
                 "systems, and generalized Stirling triangles."};
    app.require_subcommand(1);

    long long cap = default_budget;
    std::string format = "json";
    std::string seed_file;
    bool timing = false;
    const auto add_globals = [&](CLI::App* cmd) {
        cmd->add_option("--cap", cap, "Work budget for enumerative routes")
            ->capture_default_str();
        cmd->add_option("--format", format, "Output format: json, csv, or plain")
            ->check(CLI::IsMember({"json", "csv", "plain"}))
            ->capture_default_str();
        cmd->add_option("--seed-shapes", seed_file,
                        "File with extra shapes for verification, one per line");
        cmd->add_flag("--timing", timing, "Report elapsed milliseconds on stderr");
    };
    add_globals(&app);

    std::string shape_text;
    long long limit = 100;
    bool brute = false, coeffs = false, dot = false, strict = false, list = false;
    bool basis = false;
    long long eval_m = 0;
    int m = 0, n = 0, k = 0, t = 1;
    std::string route = "rec", kind, only;
    int max_K = 8, max_m = 5;

    CLI::App* c_enumerate = app.add_subcommand("enumerate", "List Stirling permutations");
    c_enumerate->add_option("--shape", shape_text, "Comma-separated multiplicities")->required();
    c_enumerate->add_option("--limit", limit, "Maximum words to list (0 = count only)")
        ->capture_default_str();

    CLI::App* c_eulerian = app.add_subcommand("eulerian", "Descent-count table of a shape");
    c_eulerian->add_option("--shape", shape_text, "Comma-separated multiplicities")->required();
    c_eulerian->add_flag("--brute", brute, "Cross-check against direct enumeration");

    CLI::App* c_poly = app.add_subcommand("poly", "Associated polynomial pair of a shape");
    c_poly->add_option("--shape", shape_text, "Comma-separated multiplicities")->required();
    CLI::Option* o_eval = c_poly->add_option("--eval", eval_m, "Evaluate both polynomials here");
    c_poly->add_flag("--coeffs", coeffs, "Emit exact rational coefficients");
    c_poly->add_option("--route", route, "Evaluation route")
        ->check(CLI::IsMember({"series", "rec", "conv", "closed"}))
        ->capture_default_str();

    CLI::App* c_poset = app.add_subcommand("poset", "Cover relation of the shape's poset");
    c_poset->add_option("--shape", shape_text, "Comma-separated multiplicities")->required();
    c_poset->add_flag("--dot", dot, "Emit a DOT digraph");

    CLI::App* c_order = app.add_subcommand("order-poly", "Order polynomial of the shape's poset");
    c_order->add_option("--shape", shape_text, "Comma-separated multiplicities")->required();
    c_order->add_option("--m", m, "Chain bound")->required();
    c_order->add_flag("--strict", strict, "Strict order polynomial");

    CLI::App* c_systems = app.add_subcommand("systems", "Count partition/permutation systems");
    c_systems->add_option("--shape", shape_text, "Comma-separated multiplicities")->required();
    c_systems->add_option("--n", n, "Ground-set size")->required();
    c_systems->add_option("--m", m, "Number of blocks (partition) or left-to-right minima "
                                    "(permutation)")
        ->required();
    c_systems->add_option("--kind", kind, "partition or permutation")
        ->check(CLI::IsMember({"partition", "permutation"}))
        ->required();
    c_systems->add_flag("--list", list, "List every system (JSON and plain formats)");

    CLI::App* c_odd = app.add_subcommand("odd", "Odd-type triangle values");
    c_odd->add_option("--n", n, "Row")->required();
    c_odd->add_option("--k", k, "Column")->required();
    c_odd->add_flag("--brute", brute, "Cross-check against leader enumeration");

    CLI::App* c_central = app.add_subcommand("central", "Power-t triangle values");
    c_central->add_option("--t", t, "Power parameter")->required();
    c_central->add_option("--n", n, "Row")->required();
    c_central->add_option("--k", k, "Column")->capture_default_str();
    c_central->add_flag("--brute", brute, "Cross-check against tuple-system enumeration");
    c_central->add_flag("--basis", basis, "Check the polynomial basis identities for (t, n)");

    CLI::App* c_verify = app.add_subcommand("verify", "Run the cross-checking battery");
    c_verify->add_option("--max-K", max_K, "Largest shape total in the universe")
        ->capture_default_str();
    c_verify->add_option("--max-m", max_m, "Largest evaluation point")->capture_default_str();
    c_verify->add_option("--only", only, "Run a single identity family");

    for (CLI::App* sub : {c_enumerate, c_eulerian, c_poly, c_poset, c_order, c_systems, c_odd,
                          c_central, c_verify})
        add_globals(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        Document doc;
        if (c_enumerate->parsed()) {
            doc = run_enumerate(MultisetShape::parse(shape_text), limit, cap);
        } else if (c_eulerian->parsed()) {
            doc = run_eulerian(MultisetShape::parse(shape_text), brute, cap);
        } else if (c_poly->parsed()) {
            doc = run_poly(MultisetShape::parse(shape_text), o_eval->count() > 0, eval_m, coeffs,
                           route);
        } else if (c_poset->parsed()) {
            doc = run_poset(MultisetShape::parse(shape_text), dot);
        } else if (c_order->parsed()) {
            doc = run_order_poly(MultisetShape::parse(shape_text), m, strict, cap);
        } else if (c_systems->parsed()) {
            doc = run_systems(MultisetShape::parse(shape_text), n, m, kind, list, cap);
        } else if (c_odd->parsed()) {
            doc = run_odd(n, k, brute, cap);
        } else if (c_central->parsed()) {
            doc = run_central(t, n, k, brute, basis, cap);
        } else {
            std::vector<MultisetShape> seeds;
            if (!seed_file.empty()) seeds = load_seed_shapes(seed_file);
            doc = run_verify(max_K, max_m, only, cap, seeds);
        }
        emit(doc, format);
        if (timing) {
            const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - start)
                                .count();
            std::cerr << "elapsed_ms=" << ms << '\n';
        }
        return doc.exit_code;
    } catch (const budget_error& e) {
        std::cerr << "budget: " << e.what() << '\n';
        return 2;
    } catch (const consistency_error& e) {
        std::cerr << "cross-check: " << e.what() << '\n';
        return 3;
    } catch (const parameter_error& e) {
        std::cerr << "usage: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
