// Copyright 2026 The movecover Authors
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

#ifndef MOVECOVER_SVG_H_
#define MOVECOVER_SVG_H_

#include <string>

#include "movecover/instance.h"

namespace movecover {

// Deterministic SVG 1.1 drawing of a solution. Element classes:
//   circle.target        one dot per target
//   rect.station         one square per station, with text.station-cost
//   line.move            station -> sensor center, one per sensor
//   circle.sensor        coverage outline of radius r (disk coverage), or
//   rect.sensor          a 2r x 2r square (square coverage)
// The y axis points up; the viewBox fits all geometry plus a 10% margin.
std::string RenderSvg(const Instance& inst, const Solution& sol);

}  // namespace movecover

#endif  // MOVECOVER_SVG_H_
