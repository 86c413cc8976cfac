#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>

#include "hyperflux/errors.hpp"

namespace hyperflux {

using cplx = std::complex<double>;

// Value spaces E implemented here: C, C^d and C^{dxd}.  The single seminorm
// is the max of the absolute values of the entries; for the matrix product
// it satisfies |x.y| <= d |x| |y|, which is the bilinear constant D used by
// the convolution machinery.
enum class Shape { Scalar, Vector, Matrix };

struct ValueSpace {
    Shape shape = Shape::Scalar;
    int dim = 1;

    static ValueSpace scalar() { return {Shape::Scalar, 1}; }
    static ValueSpace vector(int d);
    static ValueSpace matrix(int d);

    int rows() const { return shape == Shape::Scalar ? 1 : dim; }
    int cols() const { return shape == Shape::Matrix ? dim : 1; }
    int size() const { return rows() * cols(); }
    double bilinear_const() const { return shape == Shape::Matrix ? dim : 1.0; }

    bool operator==(const ValueSpace& o) const {
        return shape == o.shape && dim == o.dim;
    }
};

// Fixed inline storage keeps scalar-valued quadrature allocation-free.
inline constexpr int kMaxEntries = 16;

class Value {
  public:
    Value() : space_(ValueSpace::scalar()) { e_[0] = 0.0; }
    explicit Value(cplx s) : space_(ValueSpace::scalar()) { e_[0] = s; }
    explicit Value(const ValueSpace& sp) : space_(sp) {
        if (sp.size() > kMaxEntries)
            throw value_space_error("value space dimension too large");
        for (int i = 0; i < sp.size(); ++i) e_[i] = 0.0;
    }

    static Value zero(const ValueSpace& sp) { return Value(sp); }
    static Value scalar(cplx s) { return Value(s); }

    const ValueSpace& space() const { return space_; }
    int size() const { return space_.size(); }

    cplx& operator[](int i) { return e_[i]; }
    cplx operator[](int i) const { return e_[i]; }
    cplx& at(int r, int c) { return e_[r * space_.cols() + c]; }
    cplx at(int r, int c) const { return e_[r * space_.cols() + c]; }

    bool is_scalar() const { return space_.shape == Shape::Scalar; }
    cplx as_scalar() const { return e_[0]; }

    double seminorm() const {
        double m = 0.0;
        for (int i = 0; i < size(); ++i) m = std::max(m, std::abs(e_[i]));
        return m;
    }

    Value& operator+=(const Value& o) {
        check_same(o);
        for (int i = 0; i < size(); ++i) e_[i] += o.e_[i];
        return *this;
    }
    Value& operator-=(const Value& o) {
        check_same(o);
        for (int i = 0; i < size(); ++i) e_[i] -= o.e_[i];
        return *this;
    }
    Value& operator*=(cplx s) {
        for (int i = 0; i < size(); ++i) e_[i] *= s;
        return *this;
    }

    friend Value operator+(Value a, const Value& b) { return a += b; }
    friend Value operator-(Value a, const Value& b) { return a -= b; }
    friend Value operator*(Value a, cplx s) { return a *= s; }
    friend Value operator*(cplx s, Value a) { return a *= s; }

    bool finite() const {
        for (int i = 0; i < size(); ++i)
            if (!std::isfinite(e_[i].real()) || !std::isfinite(e_[i].imag()))
                return false;
        return true;
    }

  private:
    void check_same(const Value& o) const {
        if (!(space_ == o.space_))
            throw value_space_error("value space mismatch");
    }

    ValueSpace space_;
    std::array<cplx, kMaxEntries> e_;
};

// The canonical bilinear product: scalar*any, any*scalar, matrix*matrix and
// matrix*vector.  Satisfies seminorm(x.y) <= D seminorm(x) seminorm(y) with
// D = d in the matrix cases.
Value bilinear(const Value& x, const Value& y);

// Value space that receives bilinear(x, y); throws if incompatible.
ValueSpace product_space(const ValueSpace& a, const ValueSpace& b);

}  // namespace hyperflux
