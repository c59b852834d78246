#include "convcode/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "convcode/behavior.hpp"
#include "convcode/code.hpp"
#include "convcode/crc.hpp"
#include "convcode/distance.hpp"
#include "convcode/duality.hpp"
#include "convcode/pmat_io.hpp"
#include "convcode/realization.hpp"

namespace convcode {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json matrix_json(const PolyMatrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        entries.push_back(std::move(row));
    }
    return {{"ring", std::string(to_string(m.ring()))},
            {"rows", m.rows()},
            {"cols", m.cols()},
            {"entries", std::move(entries)},
            {"pmat", serialize_pmat(m)}};
}

json fmat_json(const FMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string scalar_text(const json& v) {
    if (v.is_null()) return "none";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        if (v.empty()) return "-";
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : " ") + scalar_text(x);
        return s;
    }
    return v.dump();
}

/// Report body plus, for matrix-valued commands, the matrix printed as pmat.
struct Report {
    json data = json::object();
    /// Key of the primary matrix (printed as a pmat body after '#' lines).
    std::string primary;
    /// Keys of constant matrices printed as blocks.
    std::vector<std::string> blocks;

    std::string text() const {
        std::ostringstream os;
        const std::string prefix = primary.empty() ? "" : "# ";
        for (const auto& [k, v] : data.items()) {
            if (k == primary || std::find(blocks.begin(), blocks.end(), k) != blocks.end()) continue;
            if (v.is_object() && v.contains("pmat"))
                os << prefix << k << ": " << matrix_inline(v) << "\n";
            else
                os << prefix << k << ": " << scalar_text(v) << "\n";
        }
        for (const auto& b : blocks) {
            const auto& m = data.at(b);
            os << b << ": " << m.size() << "x" << (m.empty() ? 0 : m[0].size()) << "\n";
            for (const auto& row : m) os << "  " << scalar_text(row) << "\n";
        }
        if (!primary.empty()) os << data.at(primary).at("pmat").get<std::string>();
        return os.str();
    }

    static std::string matrix_inline(const json& m) {
        std::string s = "[";
        bool first_row = true;
        for (const auto& row : m.at("entries")) {
            if (!first_row) s += "; ";
            first_row = false;
            bool first = true;
            for (const auto& e : row) {
                if (!first) s += ", ";
                first = false;
                s += e.get<std::string>();
            }
        }
        return s + "]";
    }
};

std::string rate(std::size_t num, std::size_t den) { return std::to_string(num) + "/" + std::to_string(den); }

json ints(const std::vector<int>& v) { return json(v); }

struct Globals {
    std::string framework, axis = "z", output;
    std::uint64_t seed = 1;
    bool as_json = false;
};

Framework framework_for(const Globals& g, const PolyMatrix& m) {
    if (g.framework.empty()) {
        switch (m.ring()) {
            case Ring::poly: return Framework::ModulePolyDprime;
            case Ring::laurent: return Framework::ModuleLaurentD;
            case Ring::rational: return Framework::RationalA;
        }
    }
    auto fw = parse_framework(g.framework);
    if (!fw) throw UsageError("unknown framework '" + g.framework + "' (expected a, aprime, b, d, dprime)");
    return *fw;
}

Framework framework_named(const std::string& s) {
    auto fw = parse_framework(s);
    if (!fw) throw UsageError("unknown framework '" + s + "' (expected a, aprime, b, d, dprime)");
    return *fw;
}

Axis axis_for(const Globals& g) {
    auto a = parse_axis(g.axis);
    if (!a) throw UsageError("unknown axis '" + g.axis + "' (expected z or zplus)");
    return *a;
}

ConvCode load_code(const std::string& path, const Globals& g) {
    const PolyMatrix m = read_pmat_file(path);
    return code_from_generator(m, framework_for(g, m));
}

Ring word_ring(const ConvCode& c) {
    switch (c.framework()) {
        case Framework::ModuleLaurentD: return Ring::laurent;
        case Framework::RationalA: return Ring::rational;
        default: return Ring::poly;
    }
}

PolyMatrix generator_matrix(const ConvCode& c) { return PolyMatrix::from_poly(c.generator()).with_ring(word_ring(c)); }

void add_code_invariants(json& d, const ConvCode& c) {
    const CodeInvariants& inv = c.invariants();
    d["framework"] = std::string(to_string(c.framework()));
    d["field"] = c.field().name();
    d["n"] = inv.n;
    d["k"] = inv.k;
    d["rate"] = rate(inv.k, inv.n);
    d["forney_indices"] = ints(inv.forney_indices);
    d["kronecker_indices"] = ints(inv.kronecker_indices);
    d["degree"] = inv.degree;
    d["controller_memory"] = inv.controller_memory;
    d["observer_memory"] = inv.observer_memory ? json(*inv.observer_memory) : json(nullptr);
    d["observable"] = inv.observable;
}

void add_behavior_invariants(json& d, const Behavior& b) {
    const BehaviorInvariants& inv = b.invariants();
    d["axis"] = std::string(to_string(b.axis()));
    d["field"] = b.field().name();
    d["n"] = inv.n;
    d["r"] = b.r();
    d["free_variables"] = inv.free_variables;
    d["rate"] = rate(inv.free_variables, inv.n);
    d["kronecker_indices"] = ints(inv.kronecker_indices);
    d["mcmillan_degree"] = inv.mcmillan_degree;
    d["controllable"] = inv.controllable;
    d["autonomous"] = inv.autonomous;
}

Poly scalar_poly(const PolyMatrix& m, const std::string& what) {
    if (m.rows() != 1 || m.cols() != 1) throw Error(ErrorKind::DimensionError, what + " must be a 1x1 matrix");
    if (!m(0, 0).is_polynomial()) throw Error(ErrorKind::InvalidArgument, what + " must be a polynomial");
    return m(0, 0).to_poly();
}

std::vector<Poly> column_polys(const PolyMatrix& m, const std::string& what) {
    if (m.cols() != 1) throw Error(ErrorKind::DimensionError, what + " must be a column");
    std::vector<Poly> v;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!m(i, 0).is_polynomial()) throw Error(ErrorKind::InvalidArgument, what + " must be polynomial");
        v.push_back(m(i, 0).to_poly());
    }
    return v;
}

PolyMatrix scalar_matrix(const Poly& p) {
    PolyMat m(p.field(), 1, 1);
    m(0, 0) = p;
    return PolyMatrix::from_poly(m);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Convolutional codes over finite fields: algebra, duality, realization, distance, CRC", "convcode"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--framework", g.framework, "a | aprime | b | d | dprime (default from the file's ring)");
    app.add_option("--axis", g.axis, "Time axis for behaviors: z | zplus")->capture_default_str();
    app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
    app.add_option("--output", g.output, "Write the report to this file");
    app.add_flag("--json", g.as_json, "Machine-readable report");

    std::string file, word_file, gen_file, a_file, b_file, to, form = "abcd", kernel_file, latent_file;
    bool kernel = false, systematic = false;
    int oracle_bound = -1, at = 0;
    std::size_t trials = 100'000, burst = 0, length = 32;

    auto* analyze = app.add_subcommand("analyze", "Invariants of a code, or of a behavior with --kernel");
    analyze->add_option("file", file, "Matrix file")->required();
    analyze->add_flag("--kernel", kernel, "Read the matrix as a kernel representation");

    auto* reduce = app.add_subcommand("reduce", "Minimal basic encoder");
    reduce->add_option("file", file)->required();

    auto* parity = app.add_subcommand("parity", "Parity-check matrix");
    parity->add_option("file", file)->required();

    auto* dualize = app.add_subcommand("dualize", "Dual module code, or dual behavior with --kernel");
    dualize->add_option("file", file)->required();
    dualize->add_flag("--kernel", kernel, "Read the matrix as a kernel representation");

    auto* convert_cmd = app.add_subcommand("convert", "Move a code to another framework");
    convert_cmd->add_option("file", file)->required();
    convert_cmd->add_option("--to", to, "Target framework")->required();

    auto* realize = app.add_subcommand("realize", "First-order realizations");
    realize->add_option("file", file)->required();
    realize->add_option("--form", form, "abcd | klm | gfh (gfh reads a kernel)")
        ->check(CLI::IsMember({"abcd", "klm", "gfh"}))
        ->capture_default_str();

    auto* distance = app.add_subcommand("distance", "Free distance");
    distance->add_option("file", file)->required();
    distance->add_option("--oracle-bound", oracle_bound, "Also run the brute-force oracle with this degree bound");
    distance->add_flag("--kernel", kernel, "Read the matrix as a kernel representation");

    auto* member = app.add_subcommand("member", "Code membership of a word");
    member->add_option("file", file)->required();
    member->add_option("--word", word_file, "Column word file")->required();

    auto* splice_cmd = app.add_subcommand("splice", "Concatenate two codewords of a polynomial code");
    splice_cmd->add_option("file", file)->required();
    splice_cmd->add_option("--a", a_file, "Message of the past codeword (k x 1)")->required();
    splice_cmd->add_option("--b", b_file, "Message of the future codeword (k x 1)")->required();
    splice_cmd->add_option("--at", at, "Last time taken from the past codeword")->capture_default_str();

    auto* crc = app.add_subcommand("crc", "Cyclic redundancy check");
    crc->require_subcommand(1);
    auto* crc_enc = crc->add_subcommand("encode", "Encode a message");
    auto* crc_chk = crc->add_subcommand("check", "Check a received word");
    auto* crc_miss = crc->add_subcommand("missrate", "Monte-Carlo undetected-corruption rate");
    for (auto* s : {crc_enc, crc_chk, crc_miss}) {
        s->add_option("--gen", gen_file, "Generator polynomial (1x1)")->required();
        s->add_flag("--systematic", systematic, "Systematic remainder mode");
    }
    crc_enc->add_option("--word", word_file, "Message (1x1)")->required();
    crc_chk->add_option("--word", word_file, "Received word (1x1)")->required();
    crc_miss->add_option("--trials", trials, "Number of trials (>= 1000)")->capture_default_str();
    crc_miss->add_option("--burst", burst, "Burst length; 0 means uniform corruption")->capture_default_str();
    crc_miss->add_option("--length", length, "Message symbols per word")->capture_default_str();

    auto* arma = app.add_subcommand("arma", "ARMA models");
    arma->require_subcommand(1);
    auto* eliminate = arma->add_subcommand("eliminate", "Eliminate the latent variable of P w = G m");
    eliminate->add_option("p", kernel_file, "P matrix file")->required();
    eliminate->add_option("g", latent_file, "G matrix file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage_error;
    }

    Report rep;
    json& d = rep.data;
    try {
        if (analyze->parsed()) {
            if (kernel) {
                const Behavior b = behavior_from_kernel(read_pmat_file(file), axis_for(g));
                add_behavior_invariants(d, b);
                d["kernel"] = matrix_json(PolyMatrix::from_poly(b.kernel()));
            } else {
                const ConvCode c = load_code(file, g);
                add_code_invariants(d, c);
                d["generator"] = matrix_json(generator_matrix(c));
            }
        } else if (reduce->parsed()) {
            const ConvCode c = load_code(file, g);
            d["framework"] = std::string(to_string(c.framework()));
            d["forney_indices"] = ints(c.invariants().forney_indices);
            d["encoder"] = matrix_json(minimal_basic_encoder(c));
            rep.primary = "encoder";
        } else if (parity->parsed()) {
            const ConvCode c = load_code(file, g);
            const PolyMatrix h = parity_check(c);
            d["framework"] = std::string(to_string(c.framework()));
            d["observer_memory"] = c.invariants().observer_memory ? json(*c.invariants().observer_memory) : json(nullptr);
            d["parity_check"] = matrix_json(h);
            rep.primary = "parity_check";
        } else if (dualize->parsed()) {
            if (kernel) {
                const Behavior b = behavior_dual(behavior_from_kernel(read_pmat_file(file), axis_for(g)));
                add_behavior_invariants(d, b);
                d["kernel"] = matrix_json(PolyMatrix::from_poly(b.kernel()));
                rep.primary = "kernel";
            } else {
                const ConvCode c = module_dual(load_code(file, g));
                add_code_invariants(d, c);
                d["generator"] = matrix_json(generator_matrix(c));
                rep.primary = "generator";
            }
        } else if (convert_cmd->parsed()) {
            const ConvCode c = load_code(file, g);
            const ConversionResult r = convert(c, framework_named(to));
            d["from"] = std::string(to_string(c.framework()));
            d["to"] = std::string(to_string(r.code.framework()));
            d["information_lost"] = r.information_lost;
            d["note"] = r.note.empty() ? json(nullptr) : json(r.note);
            add_code_invariants(d, r.code);
            d.erase("framework");
            d["generator"] = matrix_json(generator_matrix(r.code));
            rep.primary = "generator";
        } else if (realize->parsed()) {
            if (form == "gfh") {
                const BehaviorPencil p = behavior_pencil(behavior_from_kernel(read_pmat_file(file), axis_for(g)));
                d["form"] = "gfh";
                d["full_row_rank"] = p.full_row_rank;
                d["stacked_full_column_rank"] = p.stacked_full_column_rank;
                d["right_prime"] = p.right_prime;
                d["G"] = fmat_json(p.Gp);
                d["F"] = fmat_json(p.Fp);
                d["H"] = fmat_json(p.Hp);
                rep.blocks = {"G", "F", "H"};
            } else {
                const ConvCode c = load_code(file, g);
                if (form == "abcd") {
                    const Realization r = realize_code(c);
                    const Minimality mm = is_minimal(r);
                    d["form"] = "abcd";
                    d["state_dim"] = r.state_dim();
                    d["degree"] = c.invariants().degree;
                    d["g0_full_rank"] = r.g0_full_rank;
                    d["controllable"] = mm.controllable;
                    d["observable"] = mm.observable;
                    d["A"] = fmat_json(r.A);
                    d["B"] = fmat_json(r.B);
                    d["C"] = fmat_json(r.C);
                    d["D"] = fmat_json(r.D);
                    rep.blocks = {"A", "B", "C", "D"};
                } else {
                    const CodePencil p = code_pencil(c);
                    d["form"] = "klm";
                    d["input_rows"] = p.input_rows;
                    d["output_rows"] = p.output_rows;
                    d["k_full_column_rank"] = p.k_full_column_rank;
                    d["km_full_row_rank"] = p.km_full_row_rank;
                    d["left_prime"] = p.left_prime;
                    d["controllability_indices"] = ints(p.controllability_indices);
                    d["K"] = fmat_json(p.K);
                    d["L"] = fmat_json(p.L);
                    d["M"] = fmat_json(p.M);
                    rep.blocks = {"K", "L", "M"};
                }
            }
        } else if (distance->parsed()) {
            DistanceResult r;
            if (kernel) {
                const Behavior b = behavior_from_kernel(read_pmat_file(file), axis_for(g));
                r = free_distance(b);
            } else {
                const ConvCode c = load_code(file, g);
                r = free_distance(c);
                if (oracle_bound >= 0) {
                    const auto o = free_distance_oracle(c, oracle_bound);
                    d["oracle_bound"] = oracle_bound;
                    d["oracle_d_free"] = o ? json(*o) : json(nullptr);
                }
            }
            d["d_free"] = r.d_free ? json(*r.d_free) : json("infinity");
            if (!r.witness.empty()) {
                d["witness"] = matrix_json(column_word(r.witness.front().field(), r.witness));
                d["message"] = matrix_json(column_word(r.message.front().field(), r.message));
            }
            d["states_expanded"] = r.states_expanded;
        } else if (member->parsed()) {
            const ConvCode c = load_code(file, g);
            const Membership m = membership(c, read_pmat_file(word_file));
            d["member"] = m.member;
            d["message"] = m.message ? matrix_json(*m.message) : json(nullptr);
        } else if (splice_cmd->parsed()) {
            const PolyMatrix gm = read_pmat_file(file);
            if (!gm.all_polynomial()) throw Error(ErrorKind::InvalidArgument, "splice needs a polynomial generator");
            const SpliceResult s =
                splice(gm.to_poly(), column_polys(read_pmat_file(a_file), "--a"), column_polys(read_pmat_file(b_file), "--b"), at);
            d["at"] = at;
            d["gap"] = s.gap;
            d["word"] = matrix_json(column_word(gm.field(), s.word));
            rep.primary = "word";
        } else if (crc->parsed()) {
            const CrcSpec spec(scalar_poly(read_pmat_file(gen_file), "--gen"),
                               systematic ? CrcMode::systematic : CrcMode::multiplicative);
            d["mode"] = to_string(spec.mode());
            d["generator"] = spec.generator().to_string();
            if (crc_enc->parsed()) {
                const Poly c = crc_encode(spec, scalar_poly(read_pmat_file(word_file), "--word"));
                d["codeword"] = matrix_json(scalar_matrix(c));
                rep.primary = "codeword";
            } else if (crc_chk->parsed()) {
                const CrcCheck r = crc_check(spec, scalar_poly(read_pmat_file(word_file), "--word"));
                d["accepted"] = r.accepted;
                d["message"] = r.message ? json(r.message->to_string()) : json(nullptr);
            } else {
                MissRateOptions opt;
                opt.trials = trials;
                opt.corruption = burst ? Corruption::burst(burst) : Corruption::uniform();
                opt.message_length = length;
                opt.seed = g.seed;
                const MissRate r = crc_miss_rate(spec, opt);
                d["corruption"] = burst ? "burst(" + std::to_string(burst) + ")" : std::string("uniform");
                d["message_length"] = length;
                d["seed"] = g.seed;
                d["trials"] = r.trials;
                d["accepted"] = r.accepted;
                d["estimate"] = r.estimate;
                d["std_error"] = r.std_error;
                d["ci95"] = json::array({r.ci_low, r.ci_high});
                d["predicted"] = r.predicted;
                if (const auto period = crc_period(spec.generator())) d["period"] = *period;
                else d["period"] = nullptr;
            }
        } else if (arma->parsed()) {
            const Behavior b = arma_to_kernel(read_pmat_file(kernel_file), read_pmat_file(latent_file), axis_for(g));
            add_behavior_invariants(d, b);
            d["kernel"] = matrix_json(PolyMatrix::from_poly(b.kernel()));
            rep.primary = "kernel";
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage_error;
    } catch (const Error& e) {
        err << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
        return exit_domain_error;
    }

    const std::string body = g.as_json ? d.dump(2) + "\n" : rep.text();
    if (g.output.empty()) {
        out << body;
    } else {
        std::ofstream f(g.output, std::ios::binary);
        if (!f) {
            err << "error: cannot write '" << g.output << "'\n";
            return exit_domain_error;
        }
        f << body;
    }
    return exit_ok;
}

}  // namespace convcode
