/*
 * Copyright 2026 The parsep Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace parsep {

/// Malformed textual input (PGSolver games, JSON documents).
class ParseError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A construction would materialize more objects than the configured cap allows.
class CapExceeded : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace parsep
