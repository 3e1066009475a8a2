/*
   Copyright 2025 The rcodes authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.

   v1.0
*/

#ifndef RCODES_RCODES_HPP
#define RCODES_RCODES_HPP

/* umbrella header */

#include "error.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "quantum.hpp"
#include "rcode.hpp"
#include "ring.hpp"
#include "skew.hpp"
#include "ternary_code.hpp"

#endif
