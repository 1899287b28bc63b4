namespace tfpl {}
