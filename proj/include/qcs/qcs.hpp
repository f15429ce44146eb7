// Copyright 2026 The qcs Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCS_QCS_HPP
#define QCS_QCS_HPP

#include "qcs/bargmann.hpp"
#include "qcs/common.hpp"
#include "qcs/limits.hpp"
#include "qcs/measures.hpp"
#include "qcs/orthopoly.hpp"
#include "qcs/qcore.hpp"
#include "qcs/states.hpp"

#endif  // QCS_QCS_HPP
