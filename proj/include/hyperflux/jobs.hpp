#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hyperflux/compare.hpp"
#include "hyperflux/opcalc.hpp"

namespace hyperflux {

// -------------------------------------------------------------------------
// Expression language over complex scalars and hyperfunctions.
//
//   atoms:     numbers, i, z, t
//   operators: + - * / ^, unary -
//   scalar:    exp(x)
//   builders:  dirac(a[,w]), embed(f(t), a, b), shift(h, s), dconv(h1, h2),
//              Pd(h, c0, c1, ...), mul(h, c0, c1, ...)

struct ExprNode;
using ExprPtr = std::shared_ptr<ExprNode>;

struct ExprNode {
    enum class Op {
        Num, Var, Add, Sub, Mul, Div, Pow, Neg, Exp,
        Dirac, Embed, Shift, Dconv, Pd, MulSym, Call
    };
    Op op = Op::Num;
    cplx num;
    char var = 'z';
    std::string name;  // for Call diagnostics
    std::vector<ExprPtr> args;
    size_t pos = 0;  // source position for diagnostics
};

struct Diagnostic {
    size_t pos = 0;
    std::string message;
};

// Parses the expression language; returns nullptr and fills diagnostics on
// error.
ExprPtr parse_expr(const std::string& text, std::vector<Diagnostic>& diags);

// Result of evaluating an object expression: a hyperfunction or a scalar
// function of one variable.
struct ObjectValue {
    std::optional<Hyperfunction> hyper;
    ExprPtr scalar;  // scalar expression (may reference z/t)
};

// Evaluate a scalar expression at var = x.
cplx eval_scalar(const ExprPtr& e, cplx x, char var);

// Build the object (hyperfunction or scalar) from a parsed expression.
ObjectValue build_object(const ExprPtr& e, QuadConfig cfg,
                         std::vector<Diagnostic>& diags);

// -------------------------------------------------------------------------
// Jobs.

struct GridSpec {
    double re_lo = -10.0, re_hi = 10.0;
    int re_n = 21;
    double im_lo = 0.0, im_hi = 0.0;
    int im_n = 1;

    std::vector<cplx> nodes() const;
    bool empty() const { return re_n <= 0 || im_n <= 0; }
};

// "re:a:b:n,im:a:b:n"
std::optional<GridSpec> parse_grid_string(const std::string& s);

struct JobSpec {
    std::map<std::string, std::string> object_exprs;
    std::string command;           // fourier laplace pair convolve decompose
                                   // verify compare sample
    std::string target;            // object name (or "a,b" for convolve)
    std::string target2;
    GridSpec grid;
    QuadConfig quad;
    std::string out_csv;
    std::string out_json;
    std::string suite = "all";     // for verify
    double pair_center = 0.0;      // pair: Gaussian test center
    double cut = 0.0;              // decompose cut
    double T = 1.0;                // compare: density truncation
};

struct ParseOutcome {
    std::optional<JobSpec> spec;
    std::vector<Diagnostic> diags;
};

ParseOutcome parse_job(const std::string& json_text);

// Executes the job; returns the process exit status (0 ok, 2 verification
// failure, 3 numeric divergence) and writes artifacts.
int run_job(const JobSpec& spec, std::ostream& log);

// Verification suites exposed through `hyperflux verify`.
struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};
std::vector<VerifyCheck> run_verify_suite(const std::string& suite, QuadConfig cfg,
                                          std::ostream& log);

// CSV emission: header zeta_re,zeta_im,entry_row,entry_col,val_re,val_im,err_abs
void write_samples_csv(std::ostream& os,
                       const std::vector<std::pair<cplx, TransformFunction::Sample>>& rows);

}  // namespace hyperflux
