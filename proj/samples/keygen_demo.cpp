// Generates a P-192 keypair from the OS entropy source and checks it.

#include <iostream>

#include "ecgen/ecgen.hpp"

int main() {
  const auto curve = ecgen::bundled_curve<7>("p192");
  ecgen::SystemEntropy entropy;
  const auto kp = ecgen::generate_keypair(curve, entropy);
  std::cout << ecgen::format_keypair(kp, curve);
  std::cout << "valid=" << (ecgen::validate_public_key(kp.Q, curve) ? "yes" : "no") << "\n";
}
