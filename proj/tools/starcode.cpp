// starcode: command-line front end for the starcode library.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "starcode/starcode.hpp"

using json = nlohmann::json;
using namespace starcode;

namespace {

struct Common {
    std::uint64_t seed = 0;
    std::string format;
    std::string out;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::InvalidArgument, "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

NamedCode load_code(const std::string& arg, std::uint64_t seed) {
    if (looks_like_code_spec(arg)) return parse_code_spec(arg, seed);
    try {
        return {LinearCode::from_generator(parse_matrix(slurp(arg))), std::nullopt, arg};
    } catch (const Error& e) {
        if (e.code() == Errc::ParseError) throw Error(Errc::ParseError, arg + ": " + e.what());
        throw;
    }
}

std::vector<std::size_t> parse_indices(const std::string& s) {
    std::vector<std::size_t> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 9)
            throw Error(Errc::ParseError, "bad index '" + item + "'");
        out.push_back(std::stoul(item));
    }
    return out;
}

Vector parse_vector(const std::string& s) {
    Vector out;
    for (auto v : parse_indices(s)) out.push_back(static_cast<elem_t>(v));
    return out;
}

void check_indices(const std::vector<std::size_t>& idx, std::size_t n) {
    for (auto i : idx)
        if (i >= n) throw Error(Errc::InvalidArgument, "coordinate " + std::to_string(i) + " out of range");
}

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += v[i].is_array() ? ";" : " ";
            s += scalar_text(v[i]);
        }
        return s;
    }
    return v.dump();
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it->is_object())
            flatten(*it, key, out);
        else
            out.emplace_back(key, scalar_text(*it));
    }
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

void write_output(const Common& common, const std::string& text) {
    if (common.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(common.out, std::ios::binary);
    if (!f) throw Error(Errc::InvalidArgument, "cannot write '" + common.out + "'");
    f << text;
}

void emit(const Common& common, json j) {
    j["seed"] = common.seed;
    const std::string fmt = common.format.empty() ? "json" : common.format;
    std::string text;
    if (fmt == "json") {
        text = j.dump(2) + "\n";
    } else {
        std::vector<std::pair<std::string, std::string>> rows;
        flatten(j, "", rows);
        std::ostringstream os;
        if (fmt == "csv") {
            for (std::size_t i = 0; i < rows.size(); ++i) os << (i ? "," : "") << csv_cell(rows[i].first);
            os << "\n";
            for (std::size_t i = 0; i < rows.size(); ++i) os << (i ? "," : "") << csv_cell(rows[i].second);
            os << "\n";
        } else {
            for (const auto& [k, v] : rows) os << k << ": " << v << "\n";
        }
        text = os.str();
    }
    write_output(common, text);
}

// Matrix-valued results print as matrix text unless json or csv is asked for.
void emit_code(const Common& common, const LinearCode& c) {
    if (common.format.empty() || common.format == "text") {
        write_output(common, "# seed " + std::to_string(common.seed) + "\n" + to_text(c.generator()));
        return;
    }
    emit(common, {{"n", c.n()}, {"k", c.k()}, {"q", c.field()->q()}, {"matrix", to_text(c.generator())}});
}

json distinguish_json(const DistinguishReport& r) {
    return {{"n", r.n},
            {"k", r.k},
            {"dim_square", r.dim_square},
            {"generic_dim", r.generic_dim},
            {"slack", r.slack},
            {"verdict", verdict_name(r.verdict)}};
}

json points_json(const std::vector<Vector>& pts) {
    json arr = json::array();
    for (const auto& p : pts) arr.push_back(p);
    return arr;
}

json rows_json(const Matrix& m) {
    json arr = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) arr.push_back(m.row_vector(r));
    return arr;
}

// Secret sharing with a relocatable secret coordinate: the working code
// swaps column j with the last column.
struct ShareContext {
    LinearCode original;
    LinearCode working;
    std::vector<std::size_t> perm;  // working coordinate i is original perm[i]
    std::size_t secret;
};

ShareContext share_context(const LinearCode& c, std::optional<std::size_t> secret_index) {
    const std::size_t n = c.n();
    if (n == 0) throw Error(Errc::InvalidArgument, "empty code");
    const std::size_t j = secret_index.value_or(n - 1);
    if (j >= n) throw Error(Errc::InvalidArgument, "secret index out of range");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::swap(perm[j], perm[n - 1]);
    return {c, permute(c, perm), perm, j};
}

json packet_json(const SharePacket& p) {
    json shares = json::object();
    for (auto [i, v] : p.shares) shares[std::to_string(i)] = v;
    return {{"code", p.code_id}, {"secret_index", p.secret_index}, {"shares", shares}};
}

SharePacket packet_from_json(const json& j) {
    SharePacket p;
    try {
        p.code_id = j.at("code").get<std::string>();
        p.secret_index = j.at("secret_index").get<std::size_t>();
        for (auto it = j.at("shares").begin(); it != j.at("shares").end(); ++it)
            p.shares[parse_indices(it.key()).at(0)] = it->get<elem_t>();
    } catch (const json::exception& e) {
        throw Error(Errc::ParseError, std::string("malformed packet: ") + e.what());
    } catch (const std::out_of_range&) {
        throw Error(Errc::ParseError, "malformed packet: empty player index");
    }
    return p;
}

SharePacket read_packet(const std::string& path) {
    json j;
    try {
        j = json::parse(slurp(path));
    } catch (const json::parse_error& e) {
        throw Error(Errc::ParseError, path + ": " + e.what());
    }
    return packet_from_json(j);
}

// Original-coordinate packet -> working-coordinate packet and back.
SharePacket to_working(const ShareContext& ctx, const SharePacket& p, const LinearCode& orig, const LinearCode& work) {
    if (p.code_id != code_fingerprint(orig)) throw Error(Errc::CodeMismatch, "packet was dealt from a different code");
    if (p.secret_index != ctx.secret) throw Error(Errc::CodeMismatch, "packet secret index differs");
    SharePacket out{code_fingerprint(work), ctx.working.n() - 1, {}};
    for (auto [i, v] : p.shares) {
        if (i >= ctx.perm.size() || i == ctx.secret) throw Error(Errc::InvalidArgument, "bad player index");
        out.shares[ctx.perm[i]] = v;  // perm is an involution
    }
    return out;
}

SharePacket from_working(const ShareContext& ctx, const SharePacket& p, const LinearCode& orig) {
    SharePacket out{code_fingerprint(orig), ctx.secret, {}};
    for (auto [i, v] : p.shares) out.shares[ctx.perm[i]] = v;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"starcode: linear codes under the component-wise product"};
    app.require_subcommand(1);
    Common common;
    std::function<void()> action;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", common.seed, "PRNG seed (echoed in every output)");
        sub->add_option("--format", common.format, "Output format: json, csv or text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--out", common.out, "Output path (default stdout)");
    };

    // field
    std::string field_q, field_op;
    elem_t fa = 0, fb = 0;
    auto* field_cmd = app.add_subcommand("field", "Describe F_q or evaluate one operation");
    field_cmd->add_option("--q", field_q, "Field order as q or p^m")->required();
    field_cmd->add_option("--op", field_op, "add, sub, mul, div, inv, neg or pow")
        ->check(CLI::IsMember({"add", "sub", "mul", "div", "inv", "neg", "pow"}));
    field_cmd->add_option("--a", fa, "First operand (encoded element)");
    field_cmd->add_option("--b", fb, "Second operand (element, or exponent for pow)");
    add_common(field_cmd);
    field_cmd->callback([&] {
        action = [&] {
            auto f = Field::parse(field_q);
            json j{{"p", f->p()}, {"m", f->m()}, {"q", f->q()}, {"name", f->name()}, {"modulus", f->modulus()},
                   {"primitive", f->primitive()}};
            if (!field_op.empty()) {
                auto need = [&](elem_t x) {
                    if (!f->contains(x)) throw Error(Errc::InvalidArgument, "operand outside F_" + f->name());
                };
                need(fa);
                if (field_op != "pow" && field_op != "inv" && field_op != "neg") need(fb);
                elem_t r = 0;
                if (field_op == "add") r = f->add(fa, fb);
                if (field_op == "sub") r = f->sub(fa, fb);
                if (field_op == "mul") r = f->mul(fa, fb);
                if (field_op == "div") r = f->div(fa, fb);
                if (field_op == "inv") r = f->inv(fa);
                if (field_op == "neg") r = f->neg(fa);
                if (field_op == "pow") r = f->pow(fa, fb);
                j["op"] = field_op;
                j["result"] = r;
            }
            emit(common, j);
        };
    });

    // code
    std::string code_action, code_arg, coords_arg, target_q;
    auto* code_cmd = app.add_subcommand("code", "Inspect or transform a code");
    code_cmd->add_option("action", code_action, "info, emit, dual, square, shorten, puncture, subfield, degenerate, gamma")
        ->required()
        ->check(CLI::IsMember({"info", "emit", "dual", "square", "shorten", "puncture", "subfield", "degenerate", "gamma"}));
    code_cmd->add_option("--spec,--code", code_arg, "Code spec (rs:..., herm:..., ...) or matrix file")->required();
    code_cmd->add_option("--coords", coords_arg, "Comma-separated 0-based coordinates (shorten, puncture)");
    code_cmd->add_option("--target", target_q, "Subfield order (subfield)");
    add_common(code_cmd);
    code_cmd->callback([&] {
        action = [&] {
            const auto nc = load_code(code_arg, common.seed);
            const auto& c = nc.code;
            if (code_action == "info") {
                json j{{"n", c.n()}, {"k", c.k()}, {"q", c.field()->q()}};
                j["d"] = c.k() == 0 ? json(nullptr) : json(min_distance(c));
                if (nc.ag) {
                    const auto p = designed_params(nc.ag->spec);
                    j["d_star"] = p.d_star;
                    j["family"] = family_name(nc.ag->spec.family);
                    j["genus"] = nc.ag->spec.genus;
                }
                emit(common, j);
            } else if (code_action == "emit") {
                emit_code(common, c);
            } else if (code_action == "dual") {
                emit_code(common, dual(c));
            } else if (code_action == "square") {
                emit_code(common, square(c));
            } else if (code_action == "shorten" || code_action == "puncture") {
                if (coords_arg.empty()) throw UsageError("--coords is required for " + code_action);
                const auto idx = parse_indices(coords_arg);
                check_indices(idx, c.n());
                emit_code(common, code_action == "shorten" ? shorten(c, idx) : puncture(c, idx));
            } else if (code_action == "subfield") {
                if (target_q.empty()) throw UsageError("--target is required for subfield");
                emit_code(common, subfield_subcode(c, Field::parse(target_q)));
            } else if (code_action == "degenerate") {
                const auto d = is_degenerate(c);
                json comps = json::array();
                for (const auto& comp : d.components) {
                    std::vector<std::size_t> support;
                    for (std::size_t i = 0; i < comp.n(); ++i)
                        if (!is_zero(comp.generator().column(i))) support.push_back(i);
                    comps.push_back({{"dim", comp.k()}, {"support", support}});
                }
                emit(common, {{"degenerate", d.degenerate}, {"components", comps}});
            } else {
                emit(common, {{"gamma", gamma(c)}, {"dim_square", square(c).k()}, {"k", c.k()}});
            }
        };
    });

    // star
    std::string star_a, star_b;
    auto* star_cmd = app.add_subcommand("star", "Dimension of the star product of two codes");
    star_cmd->add_option("--a", star_a, "First code (spec or file)")->required();
    star_cmd->add_option("--b", star_b, "Second code (spec or file)")->required();
    add_common(star_cmd);
    star_cmd->callback([&] {
        action = [&] {
            const auto a = load_code(star_a, common.seed);
            const auto b = load_code(star_b, common.seed + 1);
            const auto p = star_product(a.code, b.code);
            emit(common, {{"dim", p.k()}, {"n", p.n()}, {"k_a", a.code.k()}, {"k_b", b.code.k()}});
        };
    });

    // decode
    std::string dec_code, dec_aux, dec_y;
    std::size_t dec_t = 0;
    auto* dec_cmd = app.add_subcommand("decode", "Error-correcting-pair decoding of one received word");
    dec_cmd->add_option("--code", dec_code, "Code (spec or file)")->required();
    dec_cmd->add_option("--t", dec_t, "Decoding radius")->required();
    dec_cmd->add_option("--y", dec_y, "Received word, comma-separated encodings")->required();
    dec_cmd->add_option("--aux", dec_aux, "Auxiliary code A (required unless --code is an rs/herm spec)");
    add_common(dec_cmd);
    dec_cmd->callback([&] {
        action = [&] {
            const auto nc = load_code(dec_code, common.seed);
            const auto inst = [&] {
                if (!dec_aux.empty()) {
                    const auto a = load_code(dec_aux, common.seed + 1);
                    DistanceBounds bounds;
                    if (nc.ag && a.ag) bounds = designed_bounds(nc.ag->spec, a.ag->spec);
                    return make_instance(nc.code, a.code, dec_t, bounds);
                }
                if (nc.ag && (nc.ag->spec.family == Family::ReedSolomon ||
                              nc.ag->spec.family == Family::HermitianOnePoint))
                    return make_ag_instance(*nc.ag, dec_t);
                throw UsageError("--aux is required for codes outside the rs and herm families");
            }();
            const auto y = parse_vector(dec_y);
            const auto out = decode(inst, y);
            json j{{"status", out.status == DecodeStatus::Decoded ? "decoded" : "failure"},
                   {"locator_dim", out.locator_dim},
                   {"located", out.located},
                   {"guarantee", guarantee_name(inst.guarantee)},
                   {"t", dec_t}};
            j["codeword"] = out.status == DecodeStatus::Decoded ? json(out.codeword) : json(nullptr);
            j["error"] = out.status == DecodeStatus::Decoded ? json(out.error) : json(nullptr);
            emit(common, j);
        };
    });

    // distinguish
    std::string dist_code;
    bool dist_dual = false;
    auto* dist_cmd = app.add_subcommand("distinguish", "Square-code distinguisher");
    dist_cmd->add_option("--code", dist_code, "Code (spec or file)")->required();
    dist_cmd->add_flag("--dual", dist_dual, "Also report on the dual code");
    add_common(dist_cmd);
    dist_cmd->callback([&] {
        action = [&] {
            const auto nc = load_code(dist_code, common.seed);
            json j = distinguish_json(distinguish(nc.code));
            if (dist_dual) j["dual"] = distinguish_json(distinguish(dual(nc.code)));
            emit(common, j);
        };
    });

    // experiment
    std::string exp_q;
    std::size_t exp_n = 0, exp_k = 0, exp_trials = 100;
    auto* exp_cmd = app.add_subcommand("experiment", "Randomized experiments");
    exp_cmd->require_subcommand(1);
    auto* rs_cmd = exp_cmd->add_subcommand("random-square", "Histogram of dim C*C over random codes");
    rs_cmd->add_option("--q", exp_q, "Field order")->required();
    rs_cmd->add_option("--n", exp_n, "Length")->required();
    rs_cmd->add_option("--k", exp_k, "Dimension")->required();
    rs_cmd->add_option("--trials", exp_trials, "Number of trials");
    add_common(rs_cmd);
    rs_cmd->callback([&] {
        action = [&] {
            auto f = Field::parse(exp_q);
            if (exp_n > 4096) throw Error(Errc::InvalidArgument, "n too large");
            const auto hist = random_square_experiment(f, exp_n, exp_k, exp_trials, common.seed);
            json h = json::object();
            for (auto [d, count] : hist) h[std::to_string(d)] = count;
            const auto generic = generic_square_dim(exp_n, exp_k);
            const auto at_generic = hist.count(generic) ? hist.at(generic) : 0;
            emit(common, {{"q", f->q()},
                          {"n", exp_n},
                          {"k", exp_k},
                          {"trials", exp_trials},
                          {"generic_dim", generic},
                          {"generic_fraction", static_cast<double>(at_generic) / static_cast<double>(exp_trials)},
                          {"histogram", h}});
        };
    });

    // share
    std::string sh_action, sh_code, sh_packet, sh_a, sh_b, sh_players;
    elem_t sh_secret = 0;
    std::size_t sh_rmax = 0;
    std::optional<std::size_t> sh_index;
    auto* share_cmd = app.add_subcommand("share", "Code-based secret sharing");
    share_cmd->add_option("action", sh_action, "deal, reconstruct, audit or multiply")
        ->required()
        ->check(CLI::IsMember({"deal", "reconstruct", "audit", "multiply"}));
    share_cmd->add_option("--code", sh_code, "Code (spec or file)")->required();
    share_cmd->add_option("--secret", sh_secret, "Secret to deal (encoded element)");
    share_cmd->add_option("--secret-index", sh_index, "Secret coordinate (default n-1)");
    share_cmd->add_option("--packet", sh_packet, "Packet file (reconstruct)");
    share_cmd->add_option("--players", sh_players, "Coalition, comma-separated (reconstruct; default all)");
    share_cmd->add_option("--a", sh_a, "First packet file (multiply)");
    share_cmd->add_option("--b", sh_b, "Second packet file (multiply)");
    share_cmd->add_option("--r-max", sh_rmax, "Largest coalition size (audit)");
    add_common(share_cmd);
    share_cmd->callback([&] {
        action = [&] {
            const auto nc = load_code(sh_code, common.seed);
            const auto ctx = share_context(nc.code, sh_index);
            if (sh_action == "deal") {
                auto p = deal(ctx.working, sh_secret, common.seed);
                emit(common, packet_json(from_working(ctx, p, ctx.original)));
            } else if (sh_action == "reconstruct") {
                if (sh_packet.empty()) throw UsageError("--packet is required for reconstruct");
                auto p = to_working(ctx, read_packet(sh_packet), ctx.original, ctx.working);
                if (!sh_players.empty()) {
                    std::map<std::size_t, elem_t> keep;
                    for (auto i : parse_indices(sh_players)) {
                        if (i >= ctx.perm.size() || !p.shares.count(ctx.perm[i]))
                            throw Error(Errc::InvalidArgument, "player " + std::to_string(i) + " has no share");
                        keep[ctx.perm[i]] = p.shares.at(ctx.perm[i]);
                    }
                    p.shares = keep;
                }
                const auto s = reconstruct(ctx.working, p.shares);
                json j{{"recovered", s.has_value()}, {"coalition", p.shares.size()}};
                j["secret"] = s ? json(*s) : json(nullptr);
                emit(common, j);
            } else if (sh_action == "audit") {
                const auto r = privacy_audit(ctx.working, sh_rmax);
                json levels = json::array();
                for (const auto& l : r.levels)
                    levels.push_back({{"size", l.size},
                                      {"guaranteed", l.guaranteed},
                                      {"subsets", l.subsets},
                                      {"uniform_subsets", l.uniform_subsets},
                                      {"uniform", l.uniform}});
                emit(common, {{"dual_distance", r.dual_distance}, {"levels", levels}, {"consistent", r.consistent},
                              {"secret_index", ctx.secret}});
            } else {
                if (sh_a.empty() || sh_b.empty()) throw UsageError("--a and --b are required for multiply");
                const auto a = to_working(ctx, read_packet(sh_a), ctx.original, ctx.working);
                const auto b = to_working(ctx, read_packet(sh_b), ctx.original, ctx.working);
                const auto prod = multiply_shares(ctx.working, a, b);
                emit(common, packet_json(from_working(ctx, prod, square(ctx.original))));
            }
        };
    });

    // hull
    std::string hull_code;
    bool hull_pts = false;
    auto* hull_cmd = app.add_subcommand("hull", "Quadric ideal and quadratic hull of a code");
    hull_cmd->add_option("--code", hull_code, "Code (spec or file)")->required();
    hull_cmd->add_flag("--points", hull_pts, "List the hull points");
    add_common(hull_cmd);
    hull_cmd->callback([&] {
        action = [&] {
            const auto nc = load_code(hull_code, common.seed);
            const auto r = nc.ag ? hull_report(*nc.ag) : hull_report(nc.code);
            json j{{"k", r.k},
                   {"n", r.n},
                   {"dim_I2", r.dim_i2},
                   {"dim_square", r.dim_square},
                   {"hull_count", r.hull_count},
                   {"contains_generators", r.contains_generators},
                   {"ideal_basis", rows_json(r.ideal.basis)}};
            if (r.gamma) j["gamma"] = *r.gamma;
            if (r.hypotheses_met) j["hypotheses_met"] = *r.hypotheses_met;
            if (r.known_count) j["known_count"] = *r.known_count;
            if (r.hull_equals_known) j["hull_equals_known"] = *r.hull_equals_known;
            if (hull_pts) j["points"] = points_json(r.hull.points);
            emit(common, j);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        if (action) action();
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
