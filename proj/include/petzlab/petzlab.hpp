//------------------------------------------------------------------------------
//
//   Copyright 2026 The petzlab Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------
#pragma once

#include "petzlab/hermlin.hpp"
#include "petzlab/standard_form.hpp"
#include "petzlab/quadrature.hpp"
#include "petzlab/report.hpp"
#include "petzlab/divergences.hpp"
#include "petzlab/channels.hpp"
#include "petzlab/inequalities.hpp"
#include "petzlab/harness/random.hpp"
#include "petzlab/harness/serialize.hpp"
#include "petzlab/harness/suites.hpp"
#include "petzlab/harness/campaign.hpp"
