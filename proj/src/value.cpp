#include "hyperflux/value.hpp"

namespace hyperflux {

ValueSpace ValueSpace::vector(int d) {
    if (d < 1) throw value_space_error("vector dimension must be >= 1");
    if (d > kMaxEntries) throw value_space_error("vector dimension too large");
    return {Shape::Vector, d};
}

ValueSpace ValueSpace::matrix(int d) {
    if (d < 1) throw value_space_error("matrix dimension must be >= 1");
    if (d * d > kMaxEntries) throw value_space_error("matrix dimension too large");
    return {Shape::Matrix, d};
}

ValueSpace product_space(const ValueSpace& a, const ValueSpace& b) {
    if (a.shape == Shape::Scalar) return b;
    if (b.shape == Shape::Scalar) return a;
    if (a.shape == Shape::Matrix && b.shape == Shape::Matrix && a.dim == b.dim)
        return a;
    if (a.shape == Shape::Matrix && b.shape == Shape::Vector && a.dim == b.dim)
        return b;
    throw value_space_error("value spaces do not admit a bilinear product");
}

Value bilinear(const Value& x, const Value& y) {
    const ValueSpace& a = x.space();
    const ValueSpace& b = y.space();
    if (a.shape == Shape::Scalar) {
        Value r = y;
        r *= x.as_scalar();
        return r;
    }
    if (b.shape == Shape::Scalar) {
        Value r = x;
        r *= y.as_scalar();
        return r;
    }
    if (a.shape == Shape::Matrix && b.shape == Shape::Matrix && a.dim == b.dim) {
        Value r(a);
        const int d = a.dim;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                cplx s = 0.0;
                for (int k = 0; k < d; ++k) s += x.at(i, k) * y.at(k, j);
                r.at(i, j) = s;
            }
        return r;
    }
    if (a.shape == Shape::Matrix && b.shape == Shape::Vector && a.dim == b.dim) {
        Value r(b);
        const int d = a.dim;
        for (int i = 0; i < d; ++i) {
            cplx s = 0.0;
            for (int k = 0; k < d; ++k) s += x.at(i, k) * y[k];
            r[i] = s;
        }
        return r;
    }
    throw value_space_error("value spaces do not admit a bilinear product");
}

}  // namespace hyperflux
