// Minimal model and minimal twist of a genus 2 curve y^2 = f(x, 1).

#include <iostream>

#include "wmod/wmod.hpp"

int main() {
  using namespace wmod;
  const SuperellipticCurve curve(2, parse_form("7776*x^6 + 31104*x^5*y + 40176*x^4*y^2 + 25056*x^3*y^3 + 8382*x^2*y^4 + 1470*x*y^5 + 107*y^6"));
  std::cout << "curve:        " << curve.str() << "\n";
  std::cout << "moduli point: " << curve.moduli_point().str() << "\n";

  const ReductionReport model = minimal_model(curve);
  std::cout << "lambda:       " << model.lambda.str() << "\n";
  if (model.realized_equation) std::cout << "minimal:      " << model.realized_equation->str() << "\n";

  const ReductionReport twist = minimal_twist(curve, false);
  std::cout << "twist point:  " << twist.output_point.str() << "\n";
  std::cout << "height:       " << weighted_height(twist.output_point).decimal() << "\n";
}
