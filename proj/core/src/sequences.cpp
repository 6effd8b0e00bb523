// Copyright 2026 The HahnForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hahnforge/sequences.hpp"

#include <stdexcept>

namespace hahnforge {

NullSequence NullSequence::geometric(const Rat& c, const Rat& q) {
  if (!(q > 0 && q < 1)) throw std::invalid_argument("geometric ratio must lie in (0,1)");
  return {Kind::kGeometric, c, q};
}

Rat NullSequence::operator()(std::uint64_t n) const {
  if (n == 0) throw std::invalid_argument("null sequences are indexed from 1");
  switch (kind) {
    case Kind::kZero:
      return 0;
    case Kind::kHarmonic:
      return Rat(coefficient / Rat(mpz_class(std::to_string(n)), 1));
    case Kind::kGeometric: {
      mpz_class num;
      mpz_class den;
      mpz_pow_ui(num.get_mpz_t(), ratio.get_num_mpz_t(), n);
      mpz_pow_ui(den.get_mpz_t(), ratio.get_den_mpz_t(), n);
      Rat p(num, den);
      p.canonicalize();
      return Rat(coefficient * p);
    }
  }
  return 0;
}

}  // namespace hahnforge
