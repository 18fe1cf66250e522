#pragma once
#include "enricat/naive_oracle.hpp"
namespace naive = enricat::naive;
