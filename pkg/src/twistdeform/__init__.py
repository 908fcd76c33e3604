# twistdeform package
