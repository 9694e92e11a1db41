#pragma once

#define ZHAWKES_VERSION "0.1.0"
