#pragma once

#include "polytrace/bijection.hpp"
#include "polytrace/counting.hpp"
#include "polytrace/enumeration.hpp"
#include "polytrace/field.hpp"
#include "polytrace/poly.hpp"
#include "polytrace/sri.hpp"
#include "polytrace/table1.hpp"
#include "polytrace/transforms.hpp"
