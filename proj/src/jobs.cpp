#include "hyperflux/jobs.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace hyperflux {

using nlohmann::json;

// -------------------------------------------------------------------------
// Tokeniser / recursive-descent parser.

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;
    std::vector<Diagnostic>& diags;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool peek(char c) {
        skip();
        return i < s.size() && s[i] == c;
    }
    void fail(const std::string& msg) { diags.push_back({i, msg}); }

    ExprPtr expr() {
        ExprPtr lhs = term();
        if (!lhs) return nullptr;
        for (;;) {
            skip();
            if (eat('+')) {
                auto n = std::make_shared<ExprNode>();
                n->op = ExprNode::Op::Add;
                n->pos = i;
                n->args = {lhs, term()};
                if (!n->args[1]) return nullptr;
                lhs = n;
            } else if (eat('-')) {
                auto n = std::make_shared<ExprNode>();
                n->op = ExprNode::Op::Sub;
                n->pos = i;
                n->args = {lhs, term()};
                if (!n->args[1]) return nullptr;
                lhs = n;
            } else {
                return lhs;
            }
        }
    }

    ExprPtr term() {
        ExprPtr lhs = power();
        if (!lhs) return nullptr;
        for (;;) {
            skip();
            if (eat('*')) {
                auto n = std::make_shared<ExprNode>();
                n->op = ExprNode::Op::Mul;
                n->pos = i;
                n->args = {lhs, power()};
                if (!n->args[1]) return nullptr;
                lhs = n;
            } else if (eat('/')) {
                auto n = std::make_shared<ExprNode>();
                n->op = ExprNode::Op::Div;
                n->pos = i;
                n->args = {lhs, power()};
                if (!n->args[1]) return nullptr;
                lhs = n;
            } else {
                return lhs;
            }
        }
    }

    ExprPtr power() {
        ExprPtr base = unary();
        if (!base) return nullptr;
        skip();
        if (eat('^')) {
            auto n = std::make_shared<ExprNode>();
            n->op = ExprNode::Op::Pow;
            n->pos = i;
            n->args = {base, power()};  // right associative
            if (!n->args[1]) return nullptr;
            return n;
        }
        return base;
    }

    ExprPtr unary() {
        skip();
        if (eat('-')) {
            auto n = std::make_shared<ExprNode>();
            n->op = ExprNode::Op::Neg;
            n->pos = i;
            n->args = {unary()};
            if (!n->args[0]) return nullptr;
            return n;
        }
        return primary();
    }

    ExprPtr primary() {
        skip();
        if (i >= s.size()) {
            fail("unexpected end of expression");
            return nullptr;
        }
        const char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            size_t end = 0;
            double v = std::stod(s.substr(i), &end);
            auto n = std::make_shared<ExprNode>();
            n->op = ExprNode::Op::Num;
            n->num = v;
            n->pos = i;
            i += end;
            return n;
        }
        if (c == '(') {
            ++i;
            ExprPtr inner = expr();
            if (!inner) return nullptr;
            if (!eat(')')) {
                fail("expected ')'");
                return nullptr;
            }
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = i;
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            std::string name = s.substr(start, i - start);
            skip();
            if (i < s.size() && s[i] == '(') {
                ++i;
                std::vector<ExprPtr> args;
                if (!peek(')')) {
                    for (;;) {
                        ExprPtr a = expr();
                        if (!a) return nullptr;
                        args.push_back(a);
                        if (eat(',')) continue;
                        break;
                    }
                }
                if (!eat(')')) {
                    fail("expected ')' after arguments of " + name);
                    return nullptr;
                }
                auto n = std::make_shared<ExprNode>();
                n->pos = start;
                n->name = name;
                n->args = std::move(args);
                if (name == "exp") n->op = ExprNode::Op::Exp;
                else if (name == "dirac") n->op = ExprNode::Op::Dirac;
                else if (name == "embed") n->op = ExprNode::Op::Embed;
                else if (name == "shift") n->op = ExprNode::Op::Shift;
                else if (name == "dconv") n->op = ExprNode::Op::Dconv;
                else if (name == "Pd") n->op = ExprNode::Op::Pd;
                else if (name == "mul") n->op = ExprNode::Op::MulSym;
                else {
                    diags.push_back({start, "unknown builtin '" + name + "'"});
                    return nullptr;
                }
                return n;
            }
            auto n = std::make_shared<ExprNode>();
            n->pos = start;
            if (name == "i") {
                n->op = ExprNode::Op::Num;
                n->num = cplx(0.0, 1.0);
            } else if (name == "z" || name == "t") {
                n->op = ExprNode::Op::Var;
                n->var = name[0];
            } else {
                diags.push_back({start, "unknown identifier '" + name + "'"});
                return nullptr;
            }
            return n;
        }
        fail(std::string("unexpected character '") + c + "'");
        return nullptr;
    }
};

bool is_hyper_op(ExprNode::Op op) {
    using Op = ExprNode::Op;
    return op == Op::Dirac || op == Op::Embed || op == Op::Shift || op == Op::Dconv ||
           op == Op::Pd || op == Op::MulSym;
}

}  // namespace

ExprPtr parse_expr(const std::string& text, std::vector<Diagnostic>& diags) {
    Parser p{text, 0, diags};
    ExprPtr e = p.expr();
    if (!e) return nullptr;
    p.skip();
    if (p.i != text.size()) {
        diags.push_back({p.i, "trailing input"});
        return nullptr;
    }
    return e;
}

cplx eval_scalar(const ExprPtr& e, cplx x, char var) {
    using Op = ExprNode::Op;
    switch (e->op) {
        case Op::Num: return e->num;
        case Op::Var:
            return x;  // z and t both bind the free variable
        case Op::Add: return eval_scalar(e->args[0], x, var) + eval_scalar(e->args[1], x, var);
        case Op::Sub: return eval_scalar(e->args[0], x, var) - eval_scalar(e->args[1], x, var);
        case Op::Mul: return eval_scalar(e->args[0], x, var) * eval_scalar(e->args[1], x, var);
        case Op::Div: return eval_scalar(e->args[0], x, var) / eval_scalar(e->args[1], x, var);
        case Op::Pow:
            return std::pow(eval_scalar(e->args[0], x, var), eval_scalar(e->args[1], x, var));
        case Op::Neg: return -eval_scalar(e->args[0], x, var);
        case Op::Exp: return std::exp(eval_scalar(e->args[0], x, var));
        default:
            throw precondition_error("hyperfunction expression used in scalar context");
    }
}

namespace {

bool contains_hyper(const ExprPtr& e) {
    if (is_hyper_op(e->op)) return true;
    for (const auto& a : e->args)
        if (contains_hyper(a)) return true;
    return false;
}

cplx const_value(const ExprPtr& e, std::vector<Diagnostic>& diags, bool& ok) {
    try {
        cplx v = eval_scalar(e, cplx(0, 0), 'z');
        cplx v1 = eval_scalar(e, cplx(1, 0), 'z');
        if (std::abs(v - v1) > 1e-14 * (1.0 + std::abs(v))) {
            diags.push_back({e->pos, "expected a constant expression"});
            ok = false;
            return 0.0;
        }
        ok = true;
        return v;
    } catch (const std::exception& ex) {
        diags.push_back({e->pos, ex.what()});
        ok = false;
        return 0.0;
    }
}

std::optional<Hyperfunction> build_hyper(const ExprPtr& e, QuadConfig cfg,
                                         std::vector<Diagnostic>& diags);

std::optional<Hyperfunction> build_hyper_arith(const ExprPtr& e, QuadConfig cfg,
                                               std::vector<Diagnostic>& diags) {
    using Op = ExprNode::Op;
    bool ok = true;
    switch (e->op) {
        case Op::Add:
        case Op::Sub: {
            auto a = build_hyper(e->args[0], cfg, diags);
            auto b = build_hyper(e->args[1], cfg, diags);
            if (!a || !b) return std::nullopt;
            if (e->op == Op::Sub) *b = scale(*b, -1.0);
            return add(*a, *b);
        }
        case Op::Mul: {
            const bool lh = contains_hyper(e->args[0]);
            const bool rh = contains_hyper(e->args[1]);
            if (lh && rh) {
                diags.push_back({e->pos,
                                 "product of two hyperfunctions: use dconv(h1,h2)"});
                return std::nullopt;
            }
            auto h = build_hyper(e->args[lh ? 0 : 1], cfg, diags);
            if (!h) return std::nullopt;
            cplx s = const_value(e->args[lh ? 1 : 0], diags, ok);
            if (!ok) return std::nullopt;
            return scale(*h, s);
        }
        case Op::Neg: {
            auto h = build_hyper(e->args[0], cfg, diags);
            if (!h) return std::nullopt;
            return scale(*h, -1.0);
        }
        default:
            diags.push_back({e->pos, "operation not defined for hyperfunctions"});
            return std::nullopt;
    }
}

std::optional<Hyperfunction> build_hyper(const ExprPtr& e, QuadConfig cfg,
                                         std::vector<Diagnostic>& diags) {
    using Op = ExprNode::Op;
    bool ok = true;
    switch (e->op) {
        case Op::Dirac: {
            if (e->args.empty() || e->args.size() > 2) {
                diags.push_back({e->pos, "dirac(a[,weight])"});
                return std::nullopt;
            }
            cplx a = const_value(e->args[0], diags, ok);
            if (!ok) return std::nullopt;
            cplx w = 1.0;
            if (e->args.size() == 2) {
                w = const_value(e->args[1], diags, ok);
                if (!ok) return std::nullopt;
            }
            return dirac(a.real(), Value::scalar(w));
        }
        case Op::Embed: {
            if (e->args.size() != 3) {
                diags.push_back({e->pos, "embed(f(t), a, b)"});
                return std::nullopt;
            }
            if (contains_hyper(e->args[0])) {
                diags.push_back({e->pos, "embed density must be scalar"});
                return std::nullopt;
            }
            cplx a = const_value(e->args[1], diags, ok);
            if (!ok) return std::nullopt;
            cplx b = const_value(e->args[2], diags, ok);
            if (!ok) return std::nullopt;
            ExprPtr f = e->args[0];
            return cauchy_embed_scalar(
                [f](double t) { return eval_scalar(f, t, 't'); }, a.real(), b.real(),
                cfg);
        }
        case Op::Shift: {
            if (e->args.size() != 2) {
                diags.push_back({e->pos, "shift(h, s)"});
                return std::nullopt;
            }
            auto h = build_hyper(e->args[0], cfg, diags);
            if (!h) return std::nullopt;
            cplx s = const_value(e->args[1], diags, ok);
            if (!ok) return std::nullopt;
            return shift(*h, s.real());
        }
        case Op::Dconv: {
            if (e->args.size() != 2) {
                diags.push_back({e->pos, "dconv(h1, h2)"});
                return std::nullopt;
            }
            auto h1 = build_hyper(e->args[0], cfg, diags);
            auto h2 = build_hyper(e->args[1], cfg, diags);
            if (!h1 || !h2) return std::nullopt;
            try {
                return convolve_contour(*h1, *h2, cfg);
            } catch (const std::exception& ex) {
                diags.push_back({e->pos, ex.what()});
                return std::nullopt;
            }
        }
        case Op::Pd:
        case Op::MulSym: {
            if (e->args.size() < 2) {
                diags.push_back({e->pos, "Pd/mul(h, c0, c1, ...)"});
                return std::nullopt;
            }
            auto h = build_hyper(e->args[0], cfg, diags);
            if (!h) return std::nullopt;
            std::vector<cplx> coeffs;
            for (size_t k = 1; k < e->args.size(); ++k) {
                cplx ck = const_value(e->args[k], diags, ok);
                if (!ok) return std::nullopt;
                coeffs.push_back(ck);
            }
            EntireSymbol P = EntireSymbol::from_poly(coeffs);
            return e->op == Op::Pd ? apply_P_deriv(*h, P) : multiply_entire(*h, P);
        }
        default:
            return build_hyper_arith(e, cfg, diags);
    }
}

}  // namespace

ObjectValue build_object(const ExprPtr& e, QuadConfig cfg,
                         std::vector<Diagnostic>& diags) {
    ObjectValue v;
    if (contains_hyper(e)) {
        v.hyper = build_hyper(e, cfg, diags);
        return v;
    }
    v.scalar = e;
    return v;
}

// -------------------------------------------------------------------------
// Grid / job parsing.

std::vector<cplx> GridSpec::nodes() const {
    std::vector<cplx> out;
    for (int j = 0; j < im_n; ++j) {
        const double y =
            im_n == 1 ? im_lo : im_lo + (im_hi - im_lo) * j / double(im_n - 1);
        for (int i = 0; i < re_n; ++i) {
            const double x =
                re_n == 1 ? re_lo : re_lo + (re_hi - re_lo) * i / double(re_n - 1);
            out.emplace_back(x, y);
        }
    }
    return out;
}

std::optional<GridSpec> parse_grid_string(const std::string& s) {
    GridSpec g;
    g.im_n = 1;
    std::istringstream is(s);
    std::string part;
    bool have_re = false;
    while (std::getline(is, part, ',')) {
        char axis[3] = {0};
        double lo = 0, hi = 0;
        int n = 0;
        if (std::sscanf(part.c_str(), "%2[a-z]:%lf:%lf:%d", axis, &lo, &hi, &n) != 4)
            return std::nullopt;
        if (std::string(axis) == "re") {
            g.re_lo = lo; g.re_hi = hi; g.re_n = n;
            have_re = true;
        } else if (std::string(axis) == "im") {
            g.im_lo = lo; g.im_hi = hi; g.im_n = n;
        } else {
            return std::nullopt;
        }
    }
    if (!have_re || g.empty()) return std::nullopt;
    return g;
}

ParseOutcome parse_job(const std::string& json_text) {
    ParseOutcome out;
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        out.diags.push_back({e.byte, std::string("invalid JSON: ") + e.what()});
        return out;
    }
    JobSpec spec;
    if (!j.contains("command") || !j["command"].is_string()) {
        out.diags.push_back({0, "missing 'command'"});
        return out;
    }
    spec.command = j["command"].get<std::string>();
    static const char* known[] = {"fourier", "laplace", "pair", "convolve",
                                  "decompose", "verify", "compare", "sample"};
    bool found = false;
    for (const char* k : known) found = found || spec.command == k;
    if (!found) {
        out.diags.push_back({0, "unknown command '" + spec.command + "'"});
        return out;
    }

    if (j.contains("objects")) {
        for (auto& [k, v] : j["objects"].items()) {
            if (!v.is_string()) {
                out.diags.push_back({0, "object '" + k + "' must be a string"});
                return out;
            }
            spec.object_exprs[k] = v.get<std::string>();
            std::vector<Diagnostic> d2;
            if (!parse_expr(v.get<std::string>(), d2)) {
                for (auto& d : d2)
                    out.diags.push_back({d.pos, "object '" + k + "': " + d.message});
                return out;
            }
        }
    }

    spec.target = j.value("target", "");
    spec.target2 = j.value("target2", "");
    if (spec.target.empty() && !spec.object_exprs.empty())
        spec.target = spec.object_exprs.begin()->first;
    const bool needs_target = spec.command == "fourier" || spec.command == "laplace" ||
                              spec.command == "pair" || spec.command == "sample" ||
                              spec.command == "decompose" || spec.command == "convolve" ||
                              spec.command == "compare";
    if (needs_target && spec.target.empty()) {
        out.diags.push_back({0, "no target object"});
        return out;
    }
    if (needs_target && !spec.object_exprs.count(spec.target)) {
        out.diags.push_back({0, "undefined object '" + spec.target + "'"});
        return out;
    }
    if (spec.command == "convolve") {
        if (spec.target2.empty() || !spec.object_exprs.count(spec.target2)) {
            out.diags.push_back({0, "convolve needs a defined 'target2'"});
            return out;
        }
    }

    if (j.contains("grid")) {
        if (j["grid"].is_string()) {
            auto g = parse_grid_string(j["grid"].get<std::string>());
            if (!g) {
                out.diags.push_back({0, "bad grid string"});
                return out;
            }
            spec.grid = *g;
        } else {
            auto& jg = j["grid"];
            auto rd = [&](const char* key, double& lo, double& hi, int& n) {
                if (jg.contains(key) && jg[key].is_array() && jg[key].size() == 3) {
                    lo = jg[key][0].get<double>();
                    hi = jg[key][1].get<double>();
                    n = jg[key][2].get<int>();
                }
            };
            rd("re", spec.grid.re_lo, spec.grid.re_hi, spec.grid.re_n);
            rd("im", spec.grid.im_lo, spec.grid.im_hi, spec.grid.im_n);
        }
    }
    if (spec.grid.empty()) {
        out.diags.push_back({0, "grid is empty"});
        return out;
    }
    if (j.contains("quad")) {
        spec.quad.abs_tol = j["quad"].value("abs_tol", spec.quad.abs_tol);
        spec.quad.rel_tol = j["quad"].value("rel_tol", spec.quad.rel_tol);
        spec.quad.max_depth = j["quad"].value("max_depth", spec.quad.max_depth);
    }
    spec.out_csv = j.value("out", "");
    spec.out_json = j.value("out_json", "");
    spec.suite = j.value("suite", "all");
    spec.pair_center = j.value("pair_center", 0.0);
    spec.cut = j.value("cut", 0.0);
    spec.T = j.value("T", 1.0);
    out.spec = spec;
    return out;
}

// -------------------------------------------------------------------------
// CSV / JSON emission.

void write_samples_csv(
    std::ostream& os,
    const std::vector<std::pair<cplx, TransformFunction::Sample>>& rows) {
    os << "zeta_re,zeta_im,entry_row,entry_col,val_re,val_im,err_abs\n";
    char buf[256];
    for (const auto& [zeta, s] : rows) {
        const ValueSpace& sp = s.value.space();
        for (int r = 0; r < sp.rows(); ++r)
            for (int c = 0; c < sp.cols(); ++c) {
                const cplx v = s.value.at(r, c);
                std::snprintf(buf, sizeof buf, "%.17g,%.17g,%d,%d,%.17g,%.17g,%.17g\n",
                              zeta.real(), zeta.imag(), r, c, v.real(), v.imag(),
                              s.err);
                os << buf;
            }
    }
}

// -------------------------------------------------------------------------
// Verify suites (compact versions of the library invariants).

namespace {

double cnorm(cplx a) { return std::abs(a); }

std::vector<VerifyCheck> verify_shift(QuadConfig cfg) {
    std::vector<VerifyCheck> out;
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    for (int trial = 0; trial < 3; ++trial) {
        const double s = 2.0 * U(rng);
        Hyperfunction h =
            trial % 2 == 0
                ? dirac(U(rng))
                : cauchy_embed_scalar([](double t) { return std::exp(-t * t); },
                                      -0.5, 1.0, cfg);
        TransformFunction F = fourier_compact(h, cfg);
        TransformFunction Fs = fourier_compact(shift(h, s), cfg);
        double worst = 0.0;
        for (int i = 0; i < 8; ++i) {
            const cplx zeta(-4.0 + i * 1.1, 0.4 * U(rng));
            const cplx lhs = Fs(zeta).as_scalar();
            const cplx rhs = std::exp(-cplx(0, 1) * s * zeta) * F(zeta).as_scalar();
            worst = std::max(worst, cnorm(lhs - rhs));
        }
        VerifyCheck c;
        c.name = "shift/" + std::to_string(trial);
        c.pass = worst < 1e-6;
        c.detail = "max dev " + std::to_string(worst);
        out.push_back(c);
    }
    return out;
}

std::vector<VerifyCheck> verify_conv(QuadConfig cfg) {
    std::vector<VerifyCheck> out;
    Hyperfunction d1 = dirac(0.4), d2 = dirac(-0.3);
    Hyperfunction c = convolve_contour(d1, d2, cfg);
    TransformFunction F = fourier_compact(c, cfg);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const cplx zeta(-3.0 + 0.7 * i, 0.2);
        worst = std::max(worst, cnorm(F(zeta).as_scalar() -
                                      std::exp(-cplx(0, 1) * 0.1 * zeta)));
    }
    out.push_back({"conv/dirac", worst < 1e-6, "max dev " + std::to_string(worst)});
    return out;
}

std::vector<VerifyCheck> verify_germ(QuadConfig cfg) {
    (void)cfg;
    std::vector<VerifyCheck> out;
    auto one = TransformFunction::constant(Value::scalar(1.0));
    auto onep = TransformFunction(
        [](cplx z) {
            return TransformFunction::Sample{Value::scalar(1.0 + std::exp(-z)), 0.0};
        },
        Domain::Entire, ValueSpace::scalar(), "1+e^-z");
    auto rep1 = germ_equivalent_heuristic(one, one, GermSpaceTag::lg_inf(), 2, 40, 1e-9);
    out.push_back({"germ/zero", rep1.verdict == GermVerdict::Equivalent,
                   germ_verdict_name(rep1.verdict)});
    auto rep2 = germ_equivalent_heuristic(one, onep, GermSpaceTag::lo_plus_inf(), 1, 40,
                                          1e-6);
    out.push_back({"germ/exp-decay-k1", rep2.verdict == GermVerdict::Equivalent,
                   germ_verdict_name(rep2.verdict)});
    auto alg = TransformFunction(
        [](cplx z) {
            return TransformFunction::Sample{Value::scalar(1.0 + 1.0 / z), 0.0};
        },
        Domain::Entire, ValueSpace::scalar(), "1+1/z");
    auto rep3 = germ_equivalent_heuristic(one, alg, GermSpaceTag::lo_plus_inf(), 2, 40,
                                          1e-6);
    out.push_back({"germ/algebraic", rep3.verdict == GermVerdict::Distinct,
                   germ_verdict_name(rep3.verdict)});
    return out;
}

std::vector<VerifyCheck> verify_compare(QuadConfig cfg) {
    std::vector<VerifyCheck> out;
    std::vector<cplx> nodes;
    for (int i = 0; i < 6; ++i) nodes.emplace_back(0.5 + 3.0 * i, 0.0);
    auto f = [](double) { return Value::scalar(1.0); };
    ChainReport rep = consistency_chain(f, 1.0, nodes, ValueSpace::scalar(), cfg);
    out.push_back({"compare/chain-1", rep.max_dev < 1e-6,
                   "max dev " + std::to_string(rep.max_dev)});
    return out;
}

}  // namespace

std::vector<VerifyCheck> run_verify_suite(const std::string& suite, QuadConfig cfg,
                                          std::ostream& log) {
    std::vector<VerifyCheck> all;
    auto append = [&](std::vector<VerifyCheck> v) {
        for (auto& c : v) {
            log << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
            all.push_back(std::move(c));
        }
    };
    if (suite == "all" || suite == "shift") append(verify_shift(cfg));
    if (suite == "all" || suite == "conv") append(verify_conv(cfg));
    if (suite == "all" || suite == "germ") append(verify_germ(cfg));
    if (suite == "all" || suite == "compare") append(verify_compare(cfg));
    if (all.empty()) log << "unknown suite '" << suite << "'\n";
    return all;
}

// -------------------------------------------------------------------------
// Job execution.

namespace {

json verify_to_json(const std::vector<VerifyCheck>& checks) {
    json j = json::array();
    for (const auto& c : checks)
        j.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return j;
}

}  // namespace

int run_job(const JobSpec& spec, std::ostream& log) {
    try {
        std::map<std::string, ObjectValue> objects;
        std::vector<Diagnostic> diags;
        for (const auto& [name, text] : spec.object_exprs) {
            ExprPtr e = parse_expr(text, diags);
            if (!e) {
                for (auto& d : diags)
                    log << "error: object " << name << ": " << d.message << "\n";
                return 2;
            }
            objects[name] = build_object(e, spec.quad, diags);
            if (!diags.empty()) {
                for (auto& d : diags)
                    log << "error: object " << name << ": " << d.message << "\n";
                return 2;
            }
        }

        auto hyper_target = [&](const std::string& name) -> Hyperfunction {
            auto it = objects.find(name);
            if (it == objects.end() || !it->second.hyper)
                throw precondition_error("object '" + name +
                                         "' is not a hyperfunction");
            return *it->second.hyper;
        };

        auto emit_csv = [&](const TransformFunction& g) {
            std::vector<std::pair<cplx, TransformFunction::Sample>> rows;
            for (cplx zeta : spec.grid.nodes()) rows.emplace_back(zeta, g.eval_full(zeta));
            if (!spec.out_csv.empty()) {
                std::ofstream os(spec.out_csv);
                write_samples_csv(os, rows);
                log << "wrote " << rows.size() << " samples to " << spec.out_csv << "\n";
            } else {
                write_samples_csv(log, rows);
            }
        };

        if (spec.command == "fourier" || spec.command == "laplace" ||
            spec.command == "sample") {
            Hyperfunction h = hyper_target(spec.target);
            const Support K = h.support().closure_extended();
            TransformFunction g;
            const bool fourier_cmd = spec.command != "laplace";
            if (K.is_compact_real() || K.is_empty())
                g = fourier_cmd ? fourier_compact(h, spec.quad) : laplace(h, spec.quad);
            else
                g = fourier_cmd ? fourier_halfline(h, spec.quad) : laplace(h, spec.quad);
            emit_csv(g);
            return 0;
        }
        if (spec.command == "pair") {
            Hyperfunction h = hyper_target(spec.target);
            TestFunction phi = TestFunction::gaussian(spec.pair_center);
            PairResult pr = pair_full(h, phi, 0, spec.quad);
            log << "pair(" << spec.target << ", gaussian@" << spec.pair_center
                << ") = " << pr.value.as_scalar().real() << " + "
                << pr.value.as_scalar().imag() << "i  (err " << pr.err << ")\n";
            return 0;
        }
        if (spec.command == "convolve") {
            Hyperfunction h1 = hyper_target(spec.target);
            Hyperfunction h2 = hyper_target(spec.target2);
            Hyperfunction c = convolve_contour(h1, h2, spec.quad);
            TransformFunction g = fourier_compact(c, spec.quad);
            emit_csv(g);
            return 0;
        }
        if (spec.command == "decompose") {
            Hyperfunction h = hyper_target(spec.target);
            auto [l, r] = decompose_at(h, spec.cut);
            log << "left support:  " << l.support().to_string() << "\n";
            log << "right support: " << r.support().to_string() << "\n";
            return 0;
        }
        if (spec.command == "verify") {
            auto checks = run_verify_suite(spec.suite, spec.quad, log);
            if (!spec.out_json.empty()) {
                std::ofstream os(spec.out_json);
                os << verify_to_json(checks).dump(2) << "\n";
            }
            for (const auto& c : checks)
                if (!c.pass) return 2;
            return 0;
        }
        if (spec.command == "compare") {
            // the chain comparison runs on a scalar density object f(t)
            auto it = objects.find(spec.target);
            if (it == objects.end() || !it->second.scalar)
                throw precondition_error("compare needs a scalar density object f(t)");
            ExprPtr f = it->second.scalar;
            std::vector<cplx> nodes = spec.grid.nodes();
            ChainReport rep = consistency_chain(
                [f](double t) -> Value {
                    return Value::scalar(eval_scalar(f, t, 't'));
                },
                spec.T, nodes, ValueSpace::scalar(), spec.quad);
            json j;
            j["rows"] = json::array();
            for (const auto& row : rep.rows) {
                j["rows"].push_back({{"zeta", {row.zeta.real(), row.zeta.imag()}},
                                     {"ours", {row.v_ours.as_scalar().real(),
                                               row.v_ours.as_scalar().imag()}},
                                     {"komatsu", {row.v_komatsu.as_scalar().real(),
                                                  row.v_komatsu.as_scalar().imag()}},
                                     {"classical", {row.v_classical.as_scalar().real(),
                                                    row.v_classical.as_scalar().imag()}},
                                     {"max_pairwise_dev", row.max_pairwise_dev},
                                     {"flagged", row.flagged}});
            }
            j["max_dev"] = rep.max_dev;
            if (!spec.out_json.empty()) {
                std::ofstream os(spec.out_json);
                os << j.dump(2) << "\n";
            } else {
                log << j.dump(2) << "\n";
            }
            return 0;
        }
        log << "error: unhandled command " << spec.command << "\n";
        return 2;
    } catch (const divergence_error& e) {
        log << "divergence: " << e.what() << "\n";
        return 3;
    } catch (const domain_error& e) {
        log << "divergence: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        log << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace hyperflux
