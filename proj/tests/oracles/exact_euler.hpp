#pragma once

// Exact Riemann solution of the 1D Euler equations for a gamma-law gas,
// with rarefactions, by Newton iteration on the star pressure.

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oracle {

struct Primitive {
    double rho;
    double u;
    double p;
};

class ExactEuler {
public:
    ExactEuler(Primitive left, Primitive right, double gamma) : l_(left), r_(right), g_(gamma) {
        cl_ = std::sqrt(g_ * l_.p / l_.rho);
        cr_ = std::sqrt(g_ * r_.p / r_.rho);
        if (2.0 / (g_ - 1.0) * (cl_ + cr_) <= r_.u - l_.u) throw std::domain_error("vacuum generated");
        solve_star();
    }

    double p_star() const { return ps_; }
    double u_star() const { return us_; }

    Primitive sample(double xi) const {
        const double g = g_;
        if (xi <= us_) {
            if (ps_ > l_.p) {
                const double q = ps_ / l_.p;
                const double s = l_.u - cl_ * std::sqrt((g + 1) / (2 * g) * q + (g - 1) / (2 * g));
                if (xi <= s) return l_;
                return {l_.rho * (q + (g - 1) / (g + 1)) / ((g - 1) / (g + 1) * q + 1), us_, ps_};
            }
            const double head = l_.u - cl_;
            const double c_star = cl_ * std::pow(ps_ / l_.p, (g - 1) / (2 * g));
            const double tail = us_ - c_star;
            if (xi <= head) return l_;
            if (xi >= tail) return {l_.rho * std::pow(ps_ / l_.p, 1 / g), us_, ps_};
            const double coef = 2 / (g + 1) + (g - 1) / ((g + 1) * cl_) * (l_.u - xi);
            return {l_.rho * std::pow(coef, 2 / (g - 1)), 2 / (g + 1) * (cl_ + (g - 1) / 2 * l_.u + xi),
                    l_.p * std::pow(coef, 2 * g / (g - 1))};
        }
        if (ps_ > r_.p) {
            const double q = ps_ / r_.p;
            const double s = r_.u + cr_ * std::sqrt((g + 1) / (2 * g) * q + (g - 1) / (2 * g));
            if (xi >= s) return r_;
            return {r_.rho * (q + (g - 1) / (g + 1)) / ((g - 1) / (g + 1) * q + 1), us_, ps_};
        }
        const double head = r_.u + cr_;
        const double c_star = cr_ * std::pow(ps_ / r_.p, (g - 1) / (2 * g));
        const double tail = us_ + c_star;
        if (xi >= head) return r_;
        if (xi <= tail) return {r_.rho * std::pow(ps_ / r_.p, 1 / g), us_, ps_};
        const double coef = 2 / (g + 1) - (g - 1) / ((g + 1) * cr_) * (r_.u - xi);
        return {r_.rho * std::pow(coef, 2 / (g - 1)), 2 / (g + 1) * (-cr_ + (g - 1) / 2 * r_.u + xi),
                r_.p * std::pow(coef, 2 * g / (g - 1))};
    }

private:
    // pressure function of one side and its derivative
    void side(const Primitive& s, double c, double p, double& f, double& df) const {
        const double g = g_;
        if (p > s.p) {
            const double a = 2 / ((g + 1) * s.rho);
            const double b = (g - 1) / (g + 1) * s.p;
            const double root = std::sqrt(a / (p + b));
            f = (p - s.p) * root;
            df = root * (1 - (p - s.p) / (2 * (b + p)));
        } else {
            f = 2 * c / (g - 1) * (std::pow(p / s.p, (g - 1) / (2 * g)) - 1);
            df = 1 / (s.rho * c) * std::pow(p / s.p, -(g + 1) / (2 * g));
        }
    }

    void solve_star() {
        double p = std::max(1e-10, 0.5 * (l_.p + r_.p) - 0.125 * (r_.u - l_.u) * (l_.rho + r_.rho) * (cl_ + cr_));
        for (int it = 0; it < 100; ++it) {
            double fl, dfl, fr, dfr;
            side(l_, cl_, p, fl, dfl);
            side(r_, cr_, p, fr, dfr);
            const double next = std::max(1e-12, p - (fl + fr + r_.u - l_.u) / (dfl + dfr));
            const double change = 2 * std::abs(next - p) / (next + p);
            p = next;
            if (change < 1e-14) break;
        }
        double fl, dfl, fr, dfr;
        side(l_, cl_, p, fl, dfl);
        side(r_, cr_, p, fr, dfr);
        ps_ = p;
        us_ = 0.5 * (l_.u + r_.u) + 0.5 * (fr - fl);
    }

    Primitive l_, r_;
    double g_;
    double cl_ = 0, cr_ = 0, ps_ = 0, us_ = 0;
};

}  // namespace oracle
