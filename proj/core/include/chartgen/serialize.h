// Copyright 2026 The Chartgen Authors
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

#ifndef CHARTGEN_SERIALIZE_H_
#define CHARTGEN_SERIALIZE_H_

#include <span>
#include <string>

#include "chartgen/element.h"
#include "chartgen/metrics.h"
#include "chartgen/operators.h"
#include "chartgen/pipeline.h"

namespace chartgen {

// JSON documents with stable key order. Pixel geometry is rounded to two
// decimals. Wall-clock time is never included, so equal inputs give equal
// bytes.
std::string SerializeChart(const GeneralizedChart& chart);
std::string SerializeLog(std::span<const OperatorLogEntry> log);
std::string SerializeReport(const ConstraintReport& report);
std::string SerializeMetrics(const ChartMetrics& metrics);

}  // namespace chartgen

#endif  // CHARTGEN_SERIALIZE_H_
