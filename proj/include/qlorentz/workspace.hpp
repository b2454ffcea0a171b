#pragma once

#include "qlorentz/lorentz.hpp"

#include <memory>
#include <string>

namespace qlorentz {

/// Everything a verification pass needs at one parameter point, built in
/// dependency order. Immutable after construction.
struct Workspace {
    ParameterSet p;
    SpinorMetric metric;
    RMatrixPair rmat;
    SigmaSet sigma;
    MinkowskiMetric mink;
    HopfOps hopf;
    NormalFormEngine engine;
    LittleF littlef;
    LorentzGenerators lambda;
    FFunctional ffunc;
    BigRMatrix bigr;

    Workspace(const std::string& q, const std::string& r, int branch, unsigned precision,
              const std::string& tolerance = std::string(), std::size_t max_degree = 4)
        : p(make_params_str(q, r, branch, precision, tolerance)),
          metric(make_spinor_metric(p)),
          rmat(make_r(p, metric)),
          sigma(make_sigma(p, metric, rmat)),
          mink(make_metric(p, metric, sigma)),
          hopf(p, metric),
          engine(p, metric, rmat, max_degree),
          littlef(p, metric, rmat, hopf),
          lambda(make_lambda(p, metric, sigma)),
          ffunc(p, metric, sigma, littlef, hopf),
          bigr(make_big_r(ffunc, lambda)) {}
};

}  // namespace qlorentz
