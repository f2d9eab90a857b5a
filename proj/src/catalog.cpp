#include "gbkop/catalog.hpp"

#include <cmath>
#include <map>

namespace gbkop {

namespace {

double falling(int i, int d) {
    double r = 1.0;
    for (int j = 0; j < d; ++j) r *= (i - j);
    return r;
}

Function1D monomial_1d(int r) {
    return Function1D::from_poly(ShiftedPoly::monomial(r), "t^" + std::to_string(r));
}

Function2D make_monomial(int i, int j) {
    Function2D f;
    f.label = "e_{" + std::to_string(i) + "," + std::to_string(j) + "}";
    f.growth_x = i;
    f.growth_y = j;
    f.eval = [i, j](double x, double y) { return std::pow(x, i) * std::pow(y, j); };
    f.tensor_terms = {TensorTerm{monomial_1d(i), monomial_1d(j)}};
    for (int dx = 0; dx <= 3; ++dx) {
        for (int dy = 0; dy + dx <= 3; ++dy) {
            if (dx > i || dy > j) {
                f.partials[dx][dy] = [](double, double) { return 0.0; };
            } else {
                const double c = falling(i, dx) * falling(j, dy);
                const int px = i - dx, py = j - dy;
                f.partials[dx][dy] = [c, px, py](double x, double y) {
                    return c * std::pow(x, px) * std::pow(y, py);
                };
            }
        }
    }
    return f;
}

Function2D make_sum_e20_e02() {
    Function2D f;
    f.label = "e_{2,0}+e_{0,2}";
    f.growth_x = 2;
    f.growth_y = 2;
    f.eval = [](double x, double y) { return x * x + y * y; };
    f.tensor_terms = {TensorTerm{monomial_1d(2), monomial_1d(0)},
                      TensorTerm{monomial_1d(0), monomial_1d(2)}};
    const Function2D e20 = make_monomial(2, 0);
    const Function2D e02 = make_monomial(0, 2);
    for (int dx = 0; dx <= 3; ++dx) {
        for (int dy = 0; dy + dx <= 3; ++dy) {
            auto a = e20.partials[dx][dy];
            auto b = e02.partials[dx][dy];
            f.partials[dx][dy] = [a, b](double x, double y) {
                return a(x, y) + b(x, y);
            };
        }
    }
    return f;
}

Function2D make_exp_decay() {
    Function2D f;
    f.label = "exp-decay";
    f.growth_x = 0;
    f.growth_y = 0;
    f.eval = [](double x, double y) { return std::exp(-x - y); };
    f.tensor_terms = {TensorTerm{
        Function1D::from_lambda([](double t) { return std::exp(-t); }, 0, "exp(-t)"),
        Function1D::from_lambda([](double t) { return std::exp(-t); }, 0, "exp(-t)")}};
    for (int dx = 0; dx <= 3; ++dx) {
        for (int dy = 0; dy + dx <= 3; ++dy) {
            const double sign = ((dx + dy) % 2 == 0) ? 1.0 : -1.0;
            f.partials[dx][dy] = [sign](double x, double y) {
                return sign * std::exp(-x - y);
            };
        }
    }
    return f;
}

double sin_derivative(int order, double t) {
    switch (order % 4) {
        case 0: return std::sin(t);
        case 1: return std::cos(t);
        case 2: return -std::sin(t);
        default: return -std::cos(t);
    }
}

Function2D make_sin_product() {
    Function2D f;
    f.label = "sin-product";
    f.growth_x = 0;
    f.growth_y = 0;
    f.eval = [](double x, double y) { return std::sin(x) * std::sin(y); };
    f.tensor_terms = {TensorTerm{
        Function1D::from_lambda([](double t) { return std::sin(t); }, 0, "sin(t)"),
        Function1D::from_lambda([](double t) { return std::sin(t); }, 0, "sin(t)")}};
    for (int dx = 0; dx <= 3; ++dx) {
        for (int dy = 0; dy + dx <= 3; ++dy) {
            f.partials[dx][dy] = [dx, dy](double x, double y) {
                return sin_derivative(dx, x) * sin_derivative(dy, y);
            };
        }
    }
    return f;
}

Function2D make_affine() {
    Function2D f;
    f.label = "affine";
    f.growth_x = 1;
    f.growth_y = 1;
    f.eval = [](double x, double y) { return x + y; };
    f.tensor_terms = {TensorTerm{monomial_1d(1), monomial_1d(0)},
                      TensorTerm{monomial_1d(0), monomial_1d(1)}};
    for (int dx = 0; dx <= 3; ++dx) {
        for (int dy = 0; dy + dx <= 3; ++dy) {
            double c = 0.0;
            if (dx == 1 && dy == 0) c = 1.0;
            if (dx == 0 && dy == 1) c = 1.0;
            f.partials[dx][dy] = [c](double, double) { return c; };
        }
    }
    f.partials[0][0] = [](double x, double y) { return x + y; };
    return f;
}

Function2D make_constant() {
    Function2D f;
    f.label = "constant";
    f.growth_x = 0;
    f.growth_y = 0;
    f.eval = [](double, double) { return 1.0; };
    f.tensor_terms = {TensorTerm{monomial_1d(0), monomial_1d(0)}};
    for (int dx = 0; dx <= 3; ++dx) {
        for (int dy = 0; dy + dx <= 3; ++dy) {
            f.partials[dx][dy] = [dx, dy](double, double) {
                return (dx == 0 && dy == 0) ? 1.0 : 0.0;
            };
        }
    }
    return f;
}

const std::map<std::string, Function2D>& catalog() {
    static const std::map<std::string, Function2D> entries = [] {
        std::map<std::string, Function2D> m;
        for (int i = 0; i <= 3; ++i) {
            for (int j = 0; j <= 3; ++j) {
                Function2D f = make_monomial(i, j);
                m.emplace(f.label, std::move(f));
            }
        }
        for (Function2D f : {make_sum_e20_e02(), make_exp_decay(), make_sin_product(),
                             make_affine(), make_constant()}) {
            m.emplace(f.label, std::move(f));
        }
        for (auto& [name, f] : m) f.validate();
        return m;
    }();
    return entries;
}

} // namespace

const Function2D& catalog_function(const std::string& name) {
    const auto& m = catalog();
    auto it = m.find(name);
    if (it == m.end()) {
        throw std::invalid_argument("unknown catalog function: " + name);
    }
    return it->second;
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto& [name, f] : catalog()) names.push_back(name);
    return names;
}

} // namespace gbkop
