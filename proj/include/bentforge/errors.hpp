/*
   Copyright 2026 The bentforge authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BENTFORGE_ERRORS_HPP
#define BENTFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bentforge {

enum class Errc {
    NotPrime,
    NotIrreducible,
    NotPrimitive,
    MixedP,
    CoeffOverflow,
    DomainTooLarge,
    BadN,
    DeltaNotFound,
    NoGammaCandidate,
    PreconditionViolated,
    IngredientNotPartiallyBent,
    WrongLinearSpace,
    MergedNotBent,
    ParseError,
    GoldenMismatch,
    RangeTooLarge,
};

/// Library-wide exception type carrying a machine-readable code.
class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

const char* errc_name(Errc code);

} // namespace bentforge

#endif
