/*
 * Copyright 2026 The oskr Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Umbrella header. The NIST KAT generator lives in oskr/nist_drbg.hpp and
// pulls in OpenSSL, so it is not included here.

#ifndef OSKR_OSKR_HPP_
#define OSKR_OSKR_HPP_

#include "oskr/bench.hpp"
#include "oskr/codec.hpp"
#include "oskr/cpapke.hpp"
#include "oskr/failure.hpp"
#include "oskr/keccak.hpp"
#include "oskr/kem.hpp"
#include "oskr/modring.hpp"
#include "oskr/ntt.hpp"
#include "oskr/params.hpp"
#include "oskr/poly.hpp"
#include "oskr/rng.hpp"

#endif  // OSKR_OSKR_HPP_
