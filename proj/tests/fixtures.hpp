// Copyright 2026 The knotdec Authors
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

#pragma once

namespace fixtures {

inline constexpr const char* kTrefoil = "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)";
inline constexpr const char* kHopf = "X(4,1,3,2),X(2,3,1,4)";
inline constexpr const char* kBorromean =
    "X(1,2,5,4),X(3,7,6,5),X(4,6,9,8),X(7,11,10,9),X(8,10,12,1),X(11,3,2,12)";
inline constexpr const char* kFigureEight = "X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)";
// Connected sum of two trefoils.
inline constexpr const char* kGrannyLike =
    "X(1,4,2,5),X(3,12,4,1),X(5,2,6,3),X(7,10,8,11),X(9,6,10,7),X(11,8,12,9)";

// Closed 4-twist: torus link T(2,4).
inline constexpr const char* kTorus24 = "X(1,2,4,3),X(3,4,6,5),X(5,6,8,7),X(7,8,2,1)";

}  // namespace fixtures
