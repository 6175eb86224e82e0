namespace mpcross {}
