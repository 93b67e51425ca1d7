namespace quatroid {}
