// Copyright 2026 The EAQECC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EAQECC_EAQECC_HPP
#define EAQECC_EAQECC_HPP

#include "eaqecc/analysis.hpp"
#include "eaqecc/bit_vector.hpp"
#include "eaqecc/builder.hpp"
#include "eaqecc/channel.hpp"
#include "eaqecc/code_file.hpp"
#include "eaqecc/commands.hpp"
#include "eaqecc/gf2.hpp"
#include "eaqecc/gf4.hpp"
#include "eaqecc/pauli.hpp"
#include "eaqecc/symplectic.hpp"

#endif
