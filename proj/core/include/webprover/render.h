// Copyright 2026 The Webprover Authors
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
//
#ifndef WEBPROVER_RENDER_H_
#define WEBPROVER_RENDER_H_

#include <string>

#include "webprover/formula.h"

namespace webprover {

// Surface syntax with the default Unicode connectives and the fewest
// parentheses the builtin priorities allow. A → ⊥ is shown as ¬A. Refs show
// their short name.
std::string RenderFormula(const Formula& f);

}  // namespace webprover

#endif  // WEBPROVER_RENDER_H_
